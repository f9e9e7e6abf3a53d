#pragma once

#include <string>
#include <vector>

#include "atomaton/automata.hpp"

namespace atomaton {

/// Language equations of an automaton: one variable per state,
///   L_i = ∪_a a(∪_{j ∈ J_{i,a}} L_j) ∪ L_i^ε
/// together with an initial set of variables.
struct EquationSystem {
  Alphabet alphabet;
  /// Variable i is rendered as "L" + names[i].
  std::vector<std::string> names;
  /// successors[i][a] = J_{i,a}, sorted.
  std::vector<std::vector<std::vector<State>>> successors;
  std::vector<bool> epsilon;
  std::vector<State> initial;
  /// Set for systems built from a DFA, where every J_{i,a} is a singleton.
  bool deterministic = false;

  friend bool operator==(const EquationSystem&, const EquationSystem&) = default;
};

EquationSystem to_equations(const Nfa& n);
EquationSystem to_equations(const Dfa& d);
Nfa from_equations(const EquationSystem& e);

/// One line per variable in state order, terms in alphabet order with the ε
/// term last, then an "initial:" line. Union is `|`, ε is `%`, and an empty
/// right-hand side is `#`. Empty successor sets produce no term; a DFA's
/// empty-language state is an ordinary variable and is always printed.
std::string render(const EquationSystem& e);

}  // namespace atomaton
