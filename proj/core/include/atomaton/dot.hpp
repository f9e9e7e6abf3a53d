#pragma once

#include <string>
#include <string_view>

#include "atomaton/automata.hpp"

namespace atomaton {

/// Graphviz rendering: one node per state (finals double-circled), an
/// in-arrow from an invisible point for each initial state, and one edge
/// per transition. Output depends only on the input.
std::string export_dot(const Nfa& n, std::string_view graph_name = "automaton");

}  // namespace atomaton
