#pragma once

#include <optional>
#include <vector>

#include "atomaton/automata.hpp"

namespace atomaton {

/// A bijection from the states of `a` onto the states of `b` that preserves
/// transitions and the initial and final sets, or nothing if none exists.
/// Deterministic inputs with every state reachable are matched by a
/// synchronized walk from the start states; everything else by colour
/// refinement followed by backtracking.
std::optional<std::vector<State>> isomorphism(const Nfa& a, const Nfa& b);
std::optional<std::vector<State>> isomorphism(const Dfa& a, const Dfa& b);

bool is_isomorphic(const Nfa& a, const Nfa& b);
bool is_isomorphic(const Dfa& a, const Dfa& b);

}  // namespace atomaton
