#pragma once

#include <optional>

#include "atomaton/automata.hpp"

namespace atomaton {

enum class ProductMode {
  kAnd,     // L(a) ∩ L(b)
  kAndNot,  // L(a) \ L(b)
};

/// Pairwise product over the pairs reachable from (a.start, b.start).
/// Throws AlphabetMismatch unless both automata share one alphabet.
Dfa product(const Dfa& a, const Dfa& b, ProductMode mode);

Dfa complement(const Dfa& d);
/// One-state acceptors of Σ* and of ∅.
Dfa universal_dfa(const Alphabet& alphabet);
Dfa empty_dfa(const Alphabet& alphabet);

bool is_empty(const Dfa& d);
/// Shortest accepted word; among those the first in alphabet order.
std::optional<Word> shortest_word(const Dfa& d);

bool subset_of(const Dfa& a, const Dfa& b);
bool equivalent(const Dfa& a, const Dfa& b);
/// Shortest word in the symmetric difference, if any.
std::optional<Word> distinguishing_word(const Dfa& a, const Dfa& b);

bool equivalent(const Nfa& a, const Nfa& b);

}  // namespace atomaton
