#pragma once

#include <cstddef>
#include <cstdint>

#include "atomaton/automata.hpp"
#include "atomaton/regex.hpp"

namespace atomaton::testkit {

struct GenParams {
  std::size_t min_states = 1;
  std::size_t max_states = 6;
  std::size_t alphabet_size = 2;
  /// Probability of each possible transition (p, a, q).
  double density = 0.3;
  double p_initial = 0.3;
  double p_final = 0.3;
  std::uint64_t seed = 0;
  std::size_t regex_depth = 4;
};

/// Throws InvalidArgument for empty state ranges, alphabets outside 1..26
/// or probabilities outside [0, 1].
void validate(const GenParams& p);

/// The first `size` lowercase letters.
Alphabet letters(std::size_t size);

struct GenStats {
  std::size_t attempts = 0;
  std::size_t rejected_empty = 0;
};

/// Draws until the language is non-empty; rejected draws are counted in
/// `stats`.
Nfa random_nfa(const GenParams& p, GenStats* stats = nullptr);

/// Complete DFA with start 0 and a non-empty language; not necessarily
/// minimal or fully reachable.
Dfa random_dfa(const GenParams& p);

/// Expression of depth at most p.regex_depth without ∅ leaves, so its
/// language is never empty.
Regex random_regex(const GenParams& p);

/// Residual NFA for L(d): one state per non-empty quotient, the edge
/// p -a-> δ(p,a) always present, and each further edge p -a-> r with
/// L_r ⊆ a^{-1}L_p added at random. Extra initial states r with L_r ⊆ L are
/// added the same way. Every right language is a quotient of L(d).
Nfa random_residual_nfa(const Dfa& d, std::uint64_t seed);

}  // namespace atomaton::testkit
