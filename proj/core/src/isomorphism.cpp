#include "atomaton/isomorphism.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

#include "atomaton/operations.hpp"

namespace atomaton {
namespace {

std::optional<std::vector<State>> synchronized_walk(const Idfa& a,
                                                    const Idfa& b) {
  const std::size_t k = a.alphabet().size();
  std::vector<State> map(a.state_count(), kNoState);
  std::vector<bool> used(b.state_count(), false);
  std::deque<State> queue{a.start()};
  map[a.start()] = b.start();
  used[b.start()] = true;
  while (!queue.empty()) {
    State p = queue.front();
    queue.pop_front();
    State pb = map[p];
    if (a.is_final(p) != b.is_final(pb)) return std::nullopt;
    for (Symbol s = 0; s < k; ++s) {
      State q = a.next(p, s);
      State qb = b.next(pb, s);
      if ((q == kNoState) != (qb == kNoState)) return std::nullopt;
      if (q == kNoState) continue;
      if (map[q] == kNoState) {
        if (used[qb]) return std::nullopt;
        map[q] = qb;
        used[qb] = true;
        queue.push_back(q);
      } else if (map[q] != qb) {
        return std::nullopt;
      }
    }
  }
  if (std::find(map.begin(), map.end(), kNoState) != map.end()) {
    return std::nullopt;
  }
  return map;
}

struct Adjacency {
  // out[s][p] / in[s][p]: successor / predecessor sets on symbol s.
  std::vector<std::vector<StateSet>> out;
  std::vector<std::vector<StateSet>> in;

  explicit Adjacency(const Nfa& n)
      : out(n.alphabet().size(),
            std::vector<StateSet>(n.state_count(), StateSet(n.state_count()))),
        in(out) {
    for (const auto& t : n.transitions()) {
      out[t.symbol][t.from].set(t.to);
      in[t.symbol][t.to].set(t.from);
    }
  }
};

// Joint colour refinement of both automata so that colour ids are
// comparable across them.
std::pair<std::vector<int>, std::vector<int>> refine_colours(
    const Nfa& a, const Nfa& b, const Adjacency& adj_a,
    const Adjacency& adj_b) {
  const std::size_t k = a.alphabet().size();
  auto initial_key = [&](const Nfa& n, const Adjacency& adj, State q) {
    std::vector<int> key{n.is_initial(q) ? 1 : 0, n.is_final(q) ? 1 : 0};
    for (Symbol s = 0; s < k; ++s) {
      key.push_back(static_cast<int>(adj.out[s][q].count()));
      key.push_back(static_cast<int>(adj.in[s][q].count()));
    }
    return key;
  };

  auto assign = [](std::map<std::vector<int>, int>& ids,
                   const std::vector<std::vector<int>>& keys_a,
                   const std::vector<std::vector<int>>& keys_b) {
    for (const auto& key : keys_a) ids.emplace(key, 0);
    for (const auto& key : keys_b) ids.emplace(key, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    std::vector<int> ca, cb;
    for (const auto& key : keys_a) ca.push_back(ids.at(key));
    for (const auto& key : keys_b) cb.push_back(ids.at(key));
    return std::pair{ca, cb};
  };

  std::vector<std::vector<int>> keys_a, keys_b;
  for (State q = 0; q < a.state_count(); ++q) keys_a.push_back(initial_key(a, adj_a, q));
  for (State q = 0; q < b.state_count(); ++q) keys_b.push_back(initial_key(b, adj_b, q));
  std::map<std::vector<int>, int> ids;
  auto [ca, cb] = assign(ids, keys_a, keys_b);
  std::size_t colour_count = ids.size();

  auto refined_key = [&](const Adjacency& adj, const std::vector<int>& colours,
                         State q) {
    std::vector<int> key{colours[q]};
    for (Symbol s = 0; s < k; ++s) {
      std::vector<int> succ, pred;
      const auto& out = adj.out[s][q];
      for (auto r = out.find_first(); r != StateSet::npos; r = out.find_next(r)) {
        succ.push_back(colours[r]);
      }
      const auto& in = adj.in[s][q];
      for (auto r = in.find_first(); r != StateSet::npos; r = in.find_next(r)) {
        pred.push_back(colours[r]);
      }
      std::sort(succ.begin(), succ.end());
      std::sort(pred.begin(), pred.end());
      key.push_back(-1);
      key.insert(key.end(), succ.begin(), succ.end());
      key.push_back(-2);
      key.insert(key.end(), pred.begin(), pred.end());
    }
    return key;
  };

  while (true) {
    keys_a.clear();
    keys_b.clear();
    for (State q = 0; q < a.state_count(); ++q) keys_a.push_back(refined_key(adj_a, ca, q));
    for (State q = 0; q < b.state_count(); ++q) keys_b.push_back(refined_key(adj_b, cb, q));
    std::map<std::vector<int>, int> next_ids;
    auto [na, nb] = assign(next_ids, keys_a, keys_b);
    ca = std::move(na);
    cb = std::move(nb);
    if (next_ids.size() == colour_count) break;
    colour_count = next_ids.size();
  }
  return {ca, cb};
}

class Matcher {
 public:
  Matcher(const Nfa& a, const Nfa& b)
      : a_(a), b_(b), adj_a_(a), adj_b_(b),
        map_(a.state_count(), kNoState), used_(b.state_count(), false) {}

  std::optional<std::vector<State>> run() {
    auto [ca, cb] = refine_colours(a_, b_, adj_a_, adj_b_);
    std::vector<int> sorted_a = ca, sorted_b = cb;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return std::nullopt;
    colours_a_ = std::move(ca);
    colours_b_ = std::move(cb);

    std::map<int, std::size_t> class_size;
    for (int c : colours_a_) ++class_size[c];
    for (State q = 0; q < a_.state_count(); ++q) order_.push_back(q);
    std::stable_sort(order_.begin(), order_.end(), [&](State x, State y) {
      return class_size[colours_a_[x]] < class_size[colours_a_[y]];
    });
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  bool consistent(State p, State pb) const {
    const std::size_t k = a_.alphabet().size();
    for (Symbol s = 0; s < k; ++s) {
      if (adj_a_.out[s][p].test(p) != adj_b_.out[s][pb].test(pb)) return false;
      for (std::size_t i = 0; i < depth_; ++i) {
        State q = order_[i];
        State qb = map_[q];
        if (adj_a_.out[s][p].test(q) != adj_b_.out[s][pb].test(qb)) return false;
        if (adj_a_.in[s][p].test(q) != adj_b_.in[s][pb].test(qb)) return false;
      }
    }
    return true;
  }

  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    State p = order_[pos];
    for (State pb = 0; pb < b_.state_count(); ++pb) {
      if (used_[pb] || colours_b_[pb] != colours_a_[p]) continue;
      depth_ = pos;
      if (!consistent(p, pb)) continue;
      map_[p] = pb;
      used_[pb] = true;
      if (extend(pos + 1)) return true;
      map_[p] = kNoState;
      used_[pb] = false;
    }
    return false;
  }

  const Nfa& a_;
  const Nfa& b_;
  Adjacency adj_a_;
  Adjacency adj_b_;
  std::vector<int> colours_a_;
  std::vector<int> colours_b_;
  std::vector<State> order_;
  std::vector<State> map_;
  std::vector<bool> used_;
  std::size_t depth_ = 0;
};

}  // namespace

std::optional<std::vector<State>> isomorphism(const Nfa& a, const Nfa& b) {
  if (a.alphabet() != b.alphabet() || a.state_count() != b.state_count() ||
      a.transition_count() != b.transition_count() ||
      a.initial_states().count() != b.initial_states().count() ||
      a.final_states().count() != b.final_states().count()) {
    return std::nullopt;
  }
  if (a.state_count() == 0) return std::vector<State>{};

  auto da = as_idfa(a);
  auto db = as_idfa(b);
  if (da && db && reachable_states(a).all() && reachable_states(b).all()) {
    return synchronized_walk(*da, *db);
  }
  return Matcher(a, b).run();
}

std::optional<std::vector<State>> isomorphism(const Dfa& a, const Dfa& b) {
  return isomorphism(to_nfa(a), to_nfa(b));
}

bool is_isomorphic(const Nfa& a, const Nfa& b) {
  return isomorphism(a, b).has_value();
}

bool is_isomorphic(const Dfa& a, const Dfa& b) {
  return isomorphism(a, b).has_value();
}

}  // namespace atomaton
