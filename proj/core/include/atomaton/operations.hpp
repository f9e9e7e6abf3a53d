#pragma once

#include <optional>
#include <vector>

#include "atomaton/automata.hpp"

namespace atomaton {

// Conversions between the automaton types.

Nfa to_nfa(const Dfa& d);
Nfa to_nfa(const Idfa& i);

/// Drops every state that is unreachable or cannot reach a final state.
/// Throws EmptyLanguage when nothing remains.
Idfa to_idfa(const Dfa& d);

/// Completes i with one fresh non-final sink when some transition is
/// undefined; a complete Idfa converts without adding states.
Dfa to_dfa(const Idfa& i);

/// The Idfa view of n when n has exactly one initial state and at most one
/// successor per (state, symbol).
std::optional<Idfa> as_idfa(const Nfa& n);

/// n itself when it is a complete deterministic automaton, otherwise the
/// subset construction.
Dfa as_dfa(const Nfa& n);

// Operators on automata.

/// Swaps initial and final sets and reverses every transition.
Nfa reverse(const Nfa& n);

struct TrimResult {
  Nfa nfa;
  /// Old state index to new index, kNoState for removed states.
  std::vector<State> old_to_new;
};

/// Keeps the states that are both reachable and co-reachable, in their
/// original relative order. Throws EmptyLanguage when L(n) is empty.
TrimResult trim_with_map(const Nfa& n);
Nfa trim(const Nfa& n);

/// Subset construction over the subsets reachable from the initial set,
/// including the empty subset when it is reachable. States are numbered in
/// breadth-first order with symbols taken in alphabet order.
Dfa determinize(const Nfa& n);

struct MinimizeResult {
  Dfa dfa;
  /// Old state index to merged state index, kNoState for unreachable states.
  std::vector<State> class_of;
};

/// Removes unreachable states and merges equivalent states by partition
/// refinement from {final, non-final} to a fixpoint. The result is
/// numbered breadth-first from the start state; each merged state keeps the
/// labels of its first member.
MinimizeResult minimize_with_map(const Dfa& d);
Dfa minimize(const Dfa& d);

/// Minimal trim IDFA of L(i). For the empty language the result is a single
/// non-final state without transitions.
Idfa minimize_idfa(const Idfa& i);

/// True iff minimization does not shrink the reachable part of d.
bool is_minimal(const Dfa& d);
bool is_minimal(const Idfa& i);

StateSet reachable_states(const Nfa& n);
StateSet coreachable_states(const Nfa& n);
StateSet reachable_states(const Dfa& d);

bool accepts(const Nfa& n, const Word& w);

/// Dfa for the right language of q.
Dfa right_language(const Nfa& n, State q);

/// The left language of a state, delivered reversed: `dfa` accepts the
/// reversal of the left language.
struct ReversedLanguage {
  Dfa dfa;
  bool reversed = true;
};
ReversedLanguage left_language(const Nfa& n, State q);

/// L(d) w^{-1}, i.e. { x : xw in L(d) }.
Dfa right_quotient(const Dfa& d, const Word& w);

/// Requires a trim IDFA; throws NotTrim otherwise.
bool is_bideterministic(const Idfa& i);

/// Copies of d with a different start state or final set.
Dfa with_start(const Dfa& d, State start);
Dfa with_final(const Dfa& d, const StateSet& final_states);

}  // namespace atomaton
