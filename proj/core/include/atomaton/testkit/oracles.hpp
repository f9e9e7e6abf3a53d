#pragma once

#include <cstddef>
#include <vector>

#include "atomaton/automata.hpp"

namespace atomaton::testkit {

/// All words of length at most max_len, shortest first, then in alphabet
/// order.
std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len);

/// { q : d run from q on w ends in a final state }.
StateSet oracle_signature(const Dfa& d, const Word& w);

/// Distinct non-empty signatures of the words up to max_len, in increasing
/// numeric order. Words are enumerated shortest first; a word whose state
/// tuple was already reached by a shorter word is not extended, since its
/// extensions repeat known signatures.
std::vector<StateSet> oracle_atoms(const Dfa& d, std::size_t max_len);

/// Agreement on every word up to max_len. Throws AlphabetMismatch.
bool oracle_equivalent(const Nfa& a, const Nfa& b, std::size_t max_len);

/// Runs d from all states at once; accepts w iff oracle_signature(d, w)
/// equals `signature`.
Dfa track_recognizer(const Dfa& d, const StateSet& signature);

}  // namespace atomaton::testkit
