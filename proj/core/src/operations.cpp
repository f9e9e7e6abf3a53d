#include "atomaton/operations.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <utility>

#include "atomaton/error.hpp"

namespace atomaton {
namespace {

template <typename From, typename To>
void copy_labels(const From& from, To& to) {
  if (!from.has_labels()) return;
  for (State q = 0; q < from.state_count(); ++q) {
    to.set_label(q, from.state_name(q));
  }
}

std::string subset_name(const Nfa& n, const StateSet& subset) {
  std::string out = "{";
  bool first = true;
  for (auto q = subset.find_first(); q != StateSet::npos;
       q = subset.find_next(q)) {
    if (!first) out += ',';
    out += n.state_name(static_cast<State>(q));
    first = false;
  }
  out += '}';
  return out;
}

StateSet step(const Nfa& n, const StateSet& from, Symbol a) {
  StateSet to(n.state_count());
  for (auto q = from.find_first(); q != StateSet::npos; q = from.find_next(q)) {
    for (State r : n.successors(static_cast<State>(q), a)) to.set(r);
  }
  return to;
}

// Restriction of d to `keep`, renumbered in index order; kNoState replaces
// transitions into removed states.
Idfa restrict_to(const Dfa& d, const StateSet& keep) {
  std::vector<State> remap(d.state_count(), kNoState);
  State next_id = 0;
  for (State q = 0; q < d.state_count(); ++q) {
    if (keep.test(q)) remap[q] = next_id++;
  }
  Idfa out(d.alphabet(), next_id);
  std::vector<StateSet> subsets;
  for (State q = 0; q < d.state_count(); ++q) {
    if (remap[q] == kNoState) continue;
    State nq = remap[q];
    for (Symbol a = 0; a < d.alphabet().size(); ++a) {
      State r = remap[d.next(q, a)];
      if (r != kNoState) out.set_next(nq, a, r);
    }
    out.set_final(nq, d.is_final(q));
    if (d.has_labels()) out.set_label(nq, d.state_name(q));
    if (!d.subset_labels().empty()) subsets.push_back(d.subset_labels()[q]);
  }
  out.set_start(remap[d.start()]);
  out.set_subset_labels(std::move(subsets));
  return out;
}

}  // namespace

Nfa to_nfa(const Dfa& d) {
  Nfa n(d.alphabet(), d.state_count());
  for (State q = 0; q < d.state_count(); ++q) {
    for (Symbol a = 0; a < d.alphabet().size(); ++a) {
      n.add_transition(q, a, d.next(q, a));
    }
    n.set_final(q, d.is_final(q));
  }
  n.set_initial(d.start());
  copy_labels(d, n);
  return n;
}

Nfa to_nfa(const Idfa& i) {
  Nfa n(i.alphabet(), i.state_count());
  for (State q = 0; q < i.state_count(); ++q) {
    for (Symbol a = 0; a < i.alphabet().size(); ++a) {
      if (State r = i.next(q, a); r != kNoState) n.add_transition(q, a, r);
    }
    n.set_final(q, i.is_final(q));
  }
  n.set_initial(i.start());
  copy_labels(i, n);
  return n;
}

Idfa to_idfa(const Dfa& d) {
  Nfa n = to_nfa(d);
  StateSet keep = reachable_states(n) & coreachable_states(n);
  if (!keep.test(d.start())) {
    throw Error(ErrorCode::kEmptyLanguage,
                "trimming a DFA that accepts the empty language");
  }
  return restrict_to(d, keep);
}

Dfa to_dfa(const Idfa& i) {
  bool complete = true;
  for (State q = 0; q < i.state_count() && complete; ++q) {
    for (Symbol a = 0; a < i.alphabet().size(); ++a) {
      if (i.next(q, a) == kNoState) {
        complete = false;
        break;
      }
    }
  }
  std::size_t count = i.state_count() + (complete ? 0 : 1);
  State sink = complete ? kNoState : static_cast<State>(i.state_count());
  Dfa d(i.alphabet(), count);
  for (State q = 0; q < i.state_count(); ++q) {
    for (Symbol a = 0; a < i.alphabet().size(); ++a) {
      State r = i.next(q, a);
      d.set_next(q, a, r == kNoState ? sink : r);
    }
    d.set_final(q, i.is_final(q));
    if (i.has_labels()) d.set_label(q, i.state_name(q));
  }
  if (!complete && i.has_labels()) d.set_label(sink, "{}");
  d.set_start(i.start());
  return d;
}

std::optional<Idfa> as_idfa(const Nfa& n) {
  if (n.initial_states().count() != 1 || !n.is_deterministic()) {
    return std::nullopt;
  }
  Idfa out(n.alphabet(), n.state_count());
  for (State q = 0; q < n.state_count(); ++q) {
    for (Symbol a = 0; a < n.alphabet().size(); ++a) {
      auto targets = n.successors(q, a);
      if (!targets.empty()) out.set_next(q, a, targets.front());
    }
    out.set_final(q, n.is_final(q));
  }
  out.set_start(static_cast<State>(n.initial_states().find_first()));
  copy_labels(n, out);
  return out;
}

Dfa as_dfa(const Nfa& n) {
  if (auto idfa = as_idfa(n)) {
    if (n.transition_count() == n.state_count() * n.alphabet().size()) {
      return to_dfa(*idfa);
    }
  }
  return determinize(n);
}

Nfa reverse(const Nfa& n) {
  Nfa out(n.alphabet(), n.state_count());
  for (const auto& t : n.transitions()) out.add_transition(t.to, t.symbol, t.from);
  out.set_initial(n.final_states());
  out.set_final(n.initial_states());
  copy_labels(n, out);
  return out;
}

StateSet reachable_states(const Nfa& n) {
  StateSet seen = n.initial_states();
  std::deque<State> queue;
  for (auto q = seen.find_first(); q != StateSet::npos; q = seen.find_next(q)) {
    queue.push_back(static_cast<State>(q));
  }
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (Symbol a = 0; a < n.alphabet().size(); ++a) {
      for (State r : n.successors(q, a)) {
        if (!seen.test(r)) {
          seen.set(r);
          queue.push_back(r);
        }
      }
    }
  }
  return seen;
}

StateSet coreachable_states(const Nfa& n) {
  return reachable_states(reverse(n));
}

StateSet reachable_states(const Dfa& d) {
  StateSet seen(d.state_count());
  std::deque<State> queue{d.start()};
  seen.set(d.start());
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (Symbol a = 0; a < d.alphabet().size(); ++a) {
      State r = d.next(q, a);
      if (!seen.test(r)) {
        seen.set(r);
        queue.push_back(r);
      }
    }
  }
  return seen;
}

TrimResult trim_with_map(const Nfa& n) {
  StateSet keep = reachable_states(n) & coreachable_states(n);
  if (keep.none()) {
    throw Error(ErrorCode::kEmptyLanguage,
                "trim requires an automaton accepting a non-empty language");
  }
  std::vector<State> remap(n.state_count(), kNoState);
  State next_id = 0;
  for (State q = 0; q < n.state_count(); ++q) {
    if (keep.test(q)) remap[q] = next_id++;
  }
  Nfa out(n.alphabet(), next_id);
  for (const auto& t : n.transitions()) {
    if (remap[t.from] != kNoState && remap[t.to] != kNoState) {
      out.add_transition(remap[t.from], t.symbol, remap[t.to]);
    }
  }
  for (State q = 0; q < n.state_count(); ++q) {
    if (remap[q] == kNoState) continue;
    out.set_initial(remap[q], n.is_initial(q));
    out.set_final(remap[q], n.is_final(q));
    if (n.has_labels()) out.set_label(remap[q], n.state_name(q));
  }
  return {std::move(out), std::move(remap)};
}

Nfa trim(const Nfa& n) { return trim_with_map(n).nfa; }

Dfa determinize(const Nfa& n) {
  const std::size_t k = n.alphabet().size();
  std::map<StateSet, State> index;
  std::vector<StateSet> subsets;
  std::vector<State> table;  // row-major [state][symbol]

  auto intern = [&](StateSet s) {
    auto [it, inserted] = index.emplace(s, static_cast<State>(subsets.size()));
    if (inserted) subsets.push_back(std::move(s));
    return it->second;
  };

  intern(n.initial_states());
  for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
    for (Symbol a = 0; a < k; ++a) {
      StateSet target = step(n, subsets[cur], a);
      State id = intern(std::move(target));
      table.push_back(id);
    }
  }

  Dfa d(n.alphabet(), subsets.size());
  for (State q = 0; q < subsets.size(); ++q) {
    for (Symbol a = 0; a < k; ++a) d.set_next(q, a, table[q * k + a]);
    d.set_final(q, subsets[q].intersects(n.final_states()));
    d.set_label(q, subset_name(n, subsets[q]));
  }
  d.set_start(0);
  d.set_subset_labels(std::move(subsets));
  return d;
}

MinimizeResult minimize_with_map(const Dfa& d) {
  const std::size_t k = d.alphabet().size();

  std::vector<State> order;
  {
    StateSet seen(d.state_count());
    seen.set(d.start());
    order.push_back(d.start());
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Symbol a = 0; a < k; ++a) {
        State r = d.next(order[i], a);
        if (!seen.test(r)) {
          seen.set(r);
          order.push_back(r);
        }
      }
    }
  }

  std::vector<State> cls(d.state_count(), kNoState);
  std::size_t class_count = 0;
  {
    State final_id = kNoState;
    State other_id = kNoState;
    for (State q : order) {
      State& id = d.is_final(q) ? final_id : other_id;
      if (id == kNoState) id = static_cast<State>(class_count++);
      cls[q] = id;
    }
  }

  while (true) {
    std::map<std::vector<State>, State> signature_ids;
    std::vector<State> refined(d.state_count(), kNoState);
    std::vector<State> key(k + 1);
    for (State q : order) {
      key[0] = cls[q];
      for (Symbol a = 0; a < k; ++a) key[a + 1] = cls[d.next(q, a)];
      auto [it, _] = signature_ids.emplace(
          key, static_cast<State>(signature_ids.size()));
      refined[q] = it->second;
    }
    bool stable = signature_ids.size() == class_count;
    cls = std::move(refined);
    class_count = signature_ids.size();
    if (stable) break;
  }

  // Representative of each class: its first member in breadth-first order.
  std::vector<State> rep(class_count, kNoState);
  for (State q : order) {
    if (rep[cls[q]] == kNoState) rep[cls[q]] = q;
  }

  // Renumber classes breadth-first over the quotient.
  std::vector<State> renum(class_count, kNoState);
  std::vector<State> class_order{cls[d.start()]};
  renum[cls[d.start()]] = 0;
  for (std::size_t i = 0; i < class_order.size(); ++i) {
    State r = rep[class_order[i]];
    for (Symbol a = 0; a < k; ++a) {
      State c = cls[d.next(r, a)];
      if (renum[c] == kNoState) {
        renum[c] = static_cast<State>(class_order.size());
        class_order.push_back(c);
      }
    }
  }

  Dfa out(d.alphabet(), class_count);
  std::vector<StateSet> subsets;
  for (State nq = 0; nq < class_count; ++nq) {
    State r = rep[class_order[nq]];
    for (Symbol a = 0; a < k; ++a) out.set_next(nq, a, renum[cls[d.next(r, a)]]);
    out.set_final(nq, d.is_final(r));
    if (d.has_labels()) out.set_label(nq, d.state_name(r));
    if (!d.subset_labels().empty()) subsets.push_back(d.subset_labels()[r]);
  }
  out.set_start(0);
  out.set_subset_labels(std::move(subsets));

  std::vector<State> class_of(d.state_count(), kNoState);
  for (State q : order) class_of[q] = renum[cls[q]];
  return {std::move(out), std::move(class_of)};
}

Dfa minimize(const Dfa& d) { return minimize_with_map(d).dfa; }

Idfa minimize_idfa(const Idfa& i) {
  Dfa m = minimize(to_dfa(i));
  if (m.final_states().none()) {
    Idfa empty(i.alphabet(), 1);
    return empty;
  }
  return to_idfa(m);
}

bool is_minimal(const Dfa& d) {
  return minimize(d).state_count() == reachable_states(d).count();
}

bool is_minimal(const Idfa& i) {
  return minimize_idfa(i).state_count() == reachable_states(to_nfa(i)).count();
}

bool accepts(const Nfa& n, const Word& w) {
  StateSet frontier = n.initial_states();
  for (Symbol a : w) {
    frontier = step(n, frontier, a);
    if (frontier.none()) return false;
  }
  return frontier.intersects(n.final_states());
}

Dfa right_language(const Nfa& n, State q) {
  if (q >= n.state_count()) {
    throw Error(ErrorCode::kInvalidArgument, "state out of range");
  }
  Nfa from_q = n;
  StateSet init(n.state_count());
  init.set(q);
  from_q.set_initial(init);
  return determinize(from_q);
}

ReversedLanguage left_language(const Nfa& n, State q) {
  if (q >= n.state_count()) {
    throw Error(ErrorCode::kInvalidArgument, "state out of range");
  }
  Nfa r = reverse(n);
  StateSet init(n.state_count());
  init.set(q);
  r.set_initial(init);
  return {determinize(r), true};
}

Dfa right_quotient(const Dfa& d, const Word& w) {
  Nfa r = reverse(to_nfa(d));
  StateSet frontier = r.initial_states();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    frontier = step(r, frontier, *it);
  }
  r.set_initial(frontier);
  return determinize(reverse(r));
}

bool is_bideterministic(const Idfa& i) {
  Nfa n = to_nfa(i);
  StateSet live = reachable_states(n) & coreachable_states(n);
  if (live.count() != n.state_count()) {
    throw Error(ErrorCode::kNotTrim, "bideterminism is defined for trim IDFAs");
  }
  return reverse(n).is_deterministic();
}

Dfa with_start(const Dfa& d, State start) {
  Dfa out = d;
  out.set_start(start);
  return out;
}

Dfa with_final(const Dfa& d, const StateSet& final_states) {
  Dfa out = d;
  out.set_final(final_states);
  return out;
}

}  // namespace atomaton
