#include "atomaton/minimizers.hpp"

#include <stdexcept>

#include "atomaton/error.hpp"
#include "atomaton/operations.hpp"

namespace atomaton {

Dfa brzozowski_minimize(const Nfa& n) {
  return determinize(reverse(to_nfa(determinize(reverse(n)))));
}

MinimalityVerdict check_determinization_minimality(const Nfa& n) {
  TrimResult t = trim_with_map(n);
  const bool trimmed = t.nfa.state_count() != n.state_count();
  const Nfa& input = trimmed ? t.nfa : n;

  Dfa nd = determinize(input);
  AtomicityReport report = is_atomic(reverse(input));
  const bool nd_minimal = is_minimal(nd);
  const bool idfa_minimal = is_minimal(to_idfa(nd));
  return {nd_minimal,
          report.atomic,
          nd_minimal == report.atomic,
          trimmed,
          idfa_minimal,
          idfa_minimal == report.atomic,
          std::move(nd),
          std::move(report)};
}

bool corollary_nonminimal_dfa(const Dfa& d) {
  Nfa trimmed = trim(to_nfa(d));
  return is_atomic(reverse(trimmed)).atomic;
}

bool standard_form_check(const Nfa& n) {
  Dfa dr = determinize(reverse(n));
  if (dr.final_states().none()) {
    throw Error(ErrorCode::kEmptyLanguage, "standard form is defined for non-empty languages");
  }
  if (!is_minimal(dr)) return false;
  if (!is_atomic(n).atomic) {
    throw std::logic_error("standard-form automaton is not atomic");
  }
  return true;
}

}  // namespace atomaton
