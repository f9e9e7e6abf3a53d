#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "atomaton/atoms.hpp"
#include "atomaton/automata.hpp"

namespace atomaton {

struct StateAtomicity {
  /// True when the right language equals the union of `atoms`.
  bool is_union = false;
  /// Atoms meeting the right language.
  std::vector<std::size_t> atoms;
  /// Word in the symmetric difference of the right language and that union.
  std::optional<Word> counterexample;
};

struct AtomicityReport {
  bool atomic = false;
  AtomSet atom_set;
  std::vector<StateAtomicity> per_state;
};

/// Every state is checked, reachable or not. Throws EmptyLanguage.
AtomicityReport is_atomic(const Nfa& n);

struct ResidualReport {
  bool residual = false;
  /// Minimal complete DFA of L(n); its states are the quotients.
  Dfa base;
  /// Base state whose quotient equals each right language, if any.
  std::vector<std::optional<State>> quotient_of;
};

/// Throws EmptyLanguage.
ResidualReport is_residual(const Nfa& n);

/// A maximal factorization (X, Y) of L(d), identified by the closed set
/// P = { q : Y ⊆ L_q } of base states. Y is the intersection of the
/// quotients in P, X the words leading from the start into P.
struct Factorization {
  StateSet closed;
  bool empty_x = false;
  bool empty_y = false;
};

inline constexpr std::size_t kDefaultFactorizationBound = 16;

/// Requires a minimal DFA with every state reachable (NotMinimal otherwise).
/// Throws StateBlowup when d has more than `bound` states. The result is
/// ordered by closed-set value.
std::vector<Factorization> factorizations(
    const Dfa& d, std::size_t bound = kDefaultFactorizationBound);

Dfa x_recognizer(const Dfa& d, const Factorization& f);
Dfa y_recognizer(const Dfa& d, const Factorization& f);

/// The universal automaton of L(d); state i is factorizations(d)[i].
Nfa build_universal(const Dfa& d,
                    std::size_t bound = kDefaultFactorizationBound);

}  // namespace atomaton
