#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "atomaton/automata.hpp"

namespace atomaton {

// Line-oriented automaton text format:
//
//   # comment
//   alphabet: a b
//   states:   1 2 3
//   initial:  1 3
//   final:    2 3
//   trans:
//   1 b 2
//   2 a 1
//
// Section tokens may continue on following lines until the next section.
// State tokens are arbitrary identifiers numbered by first appearance; the
// `states:` section may be omitted. Every parsed state is labeled with its
// token.

Nfa parse_automaton(std::string_view text);
Nfa load_automaton(const std::filesystem::path& path);

/// Writes every section; states appear under their names (labels or
/// indices). parse_automaton(format_automaton(n)) == n for labeled n.
std::string format_automaton(const Nfa& n);

}  // namespace atomaton
