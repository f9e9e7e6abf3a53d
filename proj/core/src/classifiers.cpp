#include "atomaton/classifiers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "atomaton/error.hpp"
#include "atomaton/language.hpp"
#include "atomaton/operations.hpp"

namespace atomaton {
namespace {

bool set_less(const StateSet& a, const StateSet& b) {
  for (std::size_t q = a.size(); q-- > 0;) {
    if (a.test(q) != b.test(q)) return b.test(q);
  }
  return false;
}

constexpr std::size_t kCrossCheckStates = 6;

Dfa letter_extension(const Dfa& x, Symbol a) {
  Nfa n = to_nfa(x);
  State tail = n.add_state();
  for (State q = 0; q < x.state_count(); ++q) {
    if (x.is_final(q)) n.add_transition(q, a, tail);
  }
  StateSet fin(n.state_count());
  fin.set(tail);
  n.set_final(fin);
  return determinize(n);
}

}  // namespace

AtomicityReport is_atomic(const Nfa& n) {
  AtomicityReport report{true, compute_atoms(determinize(n)), {}};
  const AtomSet& s = report.atom_set;
  std::vector<Dfa> recognizers;
  for (std::size_t i = 0; i < s.size(); ++i) recognizers.push_back(atom_recognizer(s, i));

  for (State q = 0; q < n.state_count(); ++q) {
    Dfa right = right_language(n, q);
    StateAtomicity entry;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!is_empty(product(recognizers[i], right, ProductMode::kAnd))) {
        entry.atoms.push_back(i);
      }
    }
    Dfa joined = atom_union_recognizer(s, entry.atoms);
    entry.counterexample = distinguishing_word(right, joined);
    entry.is_union = !entry.counterexample.has_value();
    report.atomic = report.atomic && entry.is_union;
    report.per_state.push_back(std::move(entry));
  }
  return report;
}

ResidualReport is_residual(const Nfa& n) {
  Dfa base = minimize(determinize(n));
  if (base.final_states().none()) {
    throw Error(ErrorCode::kEmptyLanguage, "residuality is defined for non-empty languages");
  }
  std::vector<Dfa> quotients;
  for (State p = 0; p < base.state_count(); ++p) quotients.push_back(with_start(base, p));

  ResidualReport report{true, base, {}};
  for (State q = 0; q < n.state_count(); ++q) {
    Dfa right = right_language(n, q);
    std::optional<State> match;
    for (State p = 0; p < base.state_count(); ++p) {
      if (equivalent(right, quotients[p])) {
        match = p;
        break;
      }
    }
    report.residual = report.residual && match.has_value();
    report.quotient_of.push_back(match);
  }
  return report;
}

std::vector<Factorization> factorizations(const Dfa& d, std::size_t bound) {
  if (!is_minimal(d) || !reachable_states(d).all()) {
    throw Error(ErrorCode::kNotMinimal, "factorizations require a minimal DFA");
  }
  const std::size_t n = d.state_count();
  if (n > bound) {
    throw Error(ErrorCode::kStateBlowup,
                std::to_string(n) + " states exceed the factorization bound " +
                    std::to_string(bound));
  }

  std::vector<Dfa> quotients;
  for (State q = 0; q < n; ++q) quotients.push_back(with_start(d, q));

  // intersections[P] recognizes the intersection of the quotients in P,
  // built from P without its highest member.
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Dfa> intersections;
  intersections.reserve(subsets);
  intersections.push_back(universal_dfa(d.alphabet()));

  std::vector<StateSet> closures;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    if (mask > 0) {
      std::size_t top = 0;
      while ((mask >> (top + 1)) != 0) ++top;
      const std::size_t rest = mask & ~(std::size_t{1} << top);
      intersections.push_back(
          minimize(product(intersections[rest], quotients[top], ProductMode::kAnd)));
    }
    const Dfa& y = intersections[mask];
    StateSet closed(n);
    for (State q = 0; q < n; ++q) {
      if ((mask >> q) & 1U || subset_of(y, quotients[q])) closed.set(q);
    }
    closures.push_back(closed);
  }

  std::vector<StateSet> distinct = closures;
  std::sort(distinct.begin(), distinct.end(), set_less);
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<Factorization> out;
  for (const StateSet& closed : distinct) {
    std::size_t mask = 0;
    for (State q = 0; q < n; ++q) {
      if (closed.test(q)) mask |= std::size_t{1} << q;
    }
    out.push_back({closed, closed.none(), is_empty(intersections[mask])});
  }
  return out;
}

Dfa x_recognizer(const Dfa& d, const Factorization& f) {
  return minimize(with_final(d, f.closed));
}

Dfa y_recognizer(const Dfa& d, const Factorization& f) {
  Dfa y = universal_dfa(d.alphabet());
  for (State q = 0; q < d.state_count(); ++q) {
    if (f.closed.test(q)) y = minimize(product(y, with_start(d, q), ProductMode::kAnd));
  }
  return y;
}

Nfa build_universal(const Dfa& d, std::size_t bound) {
  std::vector<Factorization> fs = factorizations(d, bound);
  const std::size_t k = d.alphabet().size();
  Nfa u(d.alphabet(), fs.size());

  for (std::size_t i = 0; i < fs.size(); ++i) {
    const StateSet& p = fs[i].closed;
    std::string label = "P{";
    bool first = true;
    for (State q = 0; q < d.state_count(); ++q) {
      if (!p.test(q)) continue;
      if (!first) label += ',';
      label += d.state_name(q);
      first = false;
    }
    u.set_label(static_cast<State>(i), label + "}");
    if (p.test(d.start())) u.set_initial(static_cast<State>(i));
    if (p.is_subset_of(d.final_states())) u.set_final(static_cast<State>(i));
  }

  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (Symbol a = 0; a < k; ++a) {
      for (std::size_t j = 0; j < fs.size(); ++j) {
        bool edge = true;
        for (State q = 0; q < d.state_count() && edge; ++q) {
          if (fs[i].closed.test(q) && !fs[j].closed.test(d.next(q, a))) edge = false;
        }
        if (edge) u.add_transition(static_cast<State>(i), a, static_cast<State>(j));
      }
    }
  }

  if (d.state_count() <= kCrossCheckStates) {
    std::vector<Dfa> xs;
    for (const auto& f : fs) xs.push_back(x_recognizer(d, f));
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (Symbol a = 0; a < k; ++a) {
        Dfa xa = letter_extension(xs[i], a);
        auto succ = u.successors(static_cast<State>(i), a);
        for (std::size_t j = 0; j < fs.size(); ++j) {
          bool by_x = subset_of(xa, xs[j]);
          bool by_y = std::binary_search(succ.begin(), succ.end(), static_cast<State>(j));
          if (by_x != by_y) {
            throw std::logic_error("universal automaton edge rules disagree");
          }
        }
      }
    }
  }
  return u;
}

}  // namespace atomaton
