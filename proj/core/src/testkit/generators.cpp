#include "atomaton/testkit/generators.hpp"

#include <string>
#include <vector>

#include "atomaton/error.hpp"
#include "atomaton/language.hpp"
#include "atomaton/operations.hpp"
#include "atomaton/testkit/rng.hpp"

namespace atomaton::testkit {
namespace {

bool probability(double p) { return p >= 0.0 && p <= 1.0; }

std::size_t draw_states(const GenParams& p, SplitMix64& rng) {
  return p.min_states + rng.below(p.max_states - p.min_states + 1);
}

Regex draw_regex(std::size_t depth, std::size_t k, SplitMix64& rng) {
  if (depth == 0) {
    if (rng.chance(0.1)) return Regex::epsilon();
    return Regex::symbol(static_cast<Symbol>(rng.below(k)));
  }
  double roll = rng.uniform01();
  if (roll < 0.2) return Regex::symbol(static_cast<Symbol>(rng.below(k)));
  if (roll < 0.45) {
    Regex a = draw_regex(depth - 1, k, rng);
    Regex b = draw_regex(depth - 1, k, rng);
    return Regex::union_of({a, b});
  }
  if (roll < 0.75) {
    Regex a = draw_regex(depth - 1, k, rng);
    Regex b = draw_regex(depth - 1, k, rng);
    return Regex::concat({a, b});
  }
  if (roll < 0.95) return Regex::star(draw_regex(depth - 1, k, rng));
  return Regex::plus(draw_regex(depth - 1, k, rng));
}

}  // namespace

void validate(const GenParams& p) {
  if (p.min_states == 0 || p.min_states > p.max_states) {
    throw Error(ErrorCode::kInvalidArgument, "state range must satisfy 1 <= min <= max");
  }
  if (p.alphabet_size == 0 || p.alphabet_size > 26) {
    throw Error(ErrorCode::kInvalidArgument, "alphabet size must be in 1..26");
  }
  if (!probability(p.density) || !probability(p.p_initial) || !probability(p.p_final)) {
    throw Error(ErrorCode::kInvalidArgument, "probabilities must lie in [0, 1]");
  }
}

Alphabet letters(std::size_t size) {
  std::string symbols;
  for (std::size_t i = 0; i < size; ++i) symbols += static_cast<char>('a' + i);
  return Alphabet(symbols);
}

Nfa random_nfa(const GenParams& p, GenStats* stats) {
  validate(p);
  SplitMix64 rng(p.seed);
  const Alphabet alphabet = letters(p.alphabet_size);
  for (;;) {
    if (stats) ++stats->attempts;
    const std::size_t n = draw_states(p, rng);
    Nfa nfa(alphabet, n);
    for (State q = 0; q < n; ++q) {
      for (Symbol a = 0; a < alphabet.size(); ++a) {
        for (State r = 0; r < n; ++r) {
          if (rng.chance(p.density)) nfa.add_transition(q, a, r);
        }
      }
    }
    for (State q = 0; q < n; ++q) {
      if (rng.chance(p.p_initial)) nfa.set_initial(q);
      if (rng.chance(p.p_final)) nfa.set_final(q);
    }
    if (!(reachable_states(nfa) & nfa.final_states()).none()) return nfa;
    if (stats) ++stats->rejected_empty;
  }
}

Dfa random_dfa(const GenParams& p) {
  validate(p);
  SplitMix64 rng(p.seed);
  const Alphabet alphabet = letters(p.alphabet_size);
  for (;;) {
    const std::size_t n = draw_states(p, rng);
    Dfa d(alphabet, n);
    for (State q = 0; q < n; ++q) {
      for (Symbol a = 0; a < alphabet.size(); ++a) {
        d.set_next(q, a, static_cast<State>(rng.below(n)));
      }
      if (rng.chance(p.p_final)) d.set_final(q);
    }
    if (!is_empty(d)) return d;
  }
}

Regex random_regex(const GenParams& p) {
  validate(p);
  SplitMix64 rng(p.seed);
  return draw_regex(p.regex_depth, p.alphabet_size, rng);
}

Nfa random_residual_nfa(const Dfa& d, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const Dfa base = minimize(d);
  if (base.final_states().none()) {
    throw Error(ErrorCode::kEmptyLanguage, "no residual automaton for the empty language");
  }
  const std::size_t n = base.state_count();
  std::vector<Dfa> quotients;
  for (State q = 0; q < n; ++q) quotients.push_back(with_start(base, q));

  std::vector<State> index(n, kNoState);
  std::size_t kept = 0;
  for (State q = 0; q < n; ++q) {
    if (!is_empty(quotients[q])) index[q] = static_cast<State>(kept++);
  }
  std::vector<std::vector<bool>> contained(n, std::vector<bool>(n, false));
  for (State r = 0; r < n; ++r) {
    for (State s = 0; s < n; ++s) {
      if (index[r] != kNoState && index[s] != kNoState) {
        contained[r][s] = subset_of(quotients[r], quotients[s]);
      }
    }
  }

  Nfa out(base.alphabet(), kept);
  for (State q = 0; q < n; ++q) {
    if (index[q] == kNoState) continue;
    if (base.is_final(q)) out.set_final(index[q]);
    for (Symbol a = 0; a < base.alphabet().size(); ++a) {
      const State target = base.next(q, a);
      if (index[target] == kNoState) continue;
      out.add_transition(index[q], a, index[target]);
      for (State r = 0; r < n; ++r) {
        if (r != target && contained[r][target] && rng.chance(0.5)) {
          out.add_transition(index[q], a, index[r]);
        }
      }
    }
  }
  out.set_initial(index[base.start()]);
  for (State r = 0; r < n; ++r) {
    if (r != base.start() && contained[r][base.start()] && rng.chance(0.5)) {
      out.set_initial(index[r]);
    }
  }
  return out;
}

}  // namespace atomaton::testkit
