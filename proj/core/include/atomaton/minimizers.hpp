#pragma once

#include <optional>

#include "atomaton/automata.hpp"
#include "atomaton/classifiers.hpp"

namespace atomaton {

/// determinize(reverse(determinize(reverse(n)))).
Dfa brzozowski_minimize(const Nfa& n);

/// Minimality of the subset automaton of n against atomicity of its reverse.
struct MinimalityVerdict {
  bool nd_minimal = false;
  bool nr_atomic = false;
  bool agree = false;
  /// The input was not trim and was trimmed before checking.
  bool trimmed_input = false;
  /// Same comparison with the subset automaton read as an IDFA (∅ dropped).
  bool nd_minimal_idfa = false;
  bool agree_idfa = false;
  Dfa determinized;
  AtomicityReport reverse_report;
};

/// Throws EmptyLanguage.
MinimalityVerdict check_determinization_minimality(const Nfa& n);

/// is_atomic(reverse(d)) after trimming d. Throws EmptyLanguage.
bool corollary_nonminimal_dfa(const Dfa& d);

/// is_minimal(determinize(reverse(n))). When true, also requires n to be
/// atomic and throws logic_error if it is not. Throws EmptyLanguage.
bool standard_form_check(const Nfa& n);

}  // namespace atomaton
