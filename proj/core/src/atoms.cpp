#include "atomaton/atoms.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "atomaton/error.hpp"
#include "atomaton/isomorphism.hpp"
#include "atomaton/language.hpp"
#include "atomaton/operations.hpp"

namespace atomaton {
namespace {

// Numeric order of bit sets of equal width; bit q has weight 2^q.
bool signature_less(const StateSet& a, const StateSet& b) {
  for (std::size_t q = a.size(); q-- > 0;) {
    if (a.test(q) != b.test(q)) return b.test(q);
  }
  return false;
}

Dfa recognizer_for_states(const AtomSet& s, const StateSet& accepting) {
  Nfa subsets = to_nfa(s.reverse_subset);
  subsets.set_final(accepting);
  return minimize(determinize(reverse(subsets)));
}

Atomaton label_by_atoms(Nfa nfa, const AtomSet& s) {
  std::vector<Dfa> recognizers;
  for (std::size_t i = 0; i < s.size(); ++i) recognizers.push_back(atom_recognizer(s, i));

  Atomaton out{std::move(nfa), {}};
  std::vector<bool> taken(s.size(), false);
  for (State p = 0; p < out.nfa.state_count(); ++p) {
    Dfa right = right_language(out.nfa, p);
    std::size_t match = s.size();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!taken[i] && equivalent(right, recognizers[i])) {
        match = i;
        break;
      }
    }
    if (match == s.size()) {
      throw std::logic_error("state right language is not an unused atom");
    }
    taken[match] = true;
    out.nfa.set_label(p, signature_name(s, match));
    out.signature_of.push_back(s.atoms[match]);
  }
  return out;
}

}  // namespace

AtomSet compute_atoms(const Dfa& d, AtomOptions options) {
  bool minimal = is_minimal(d);
  if (options.strict && !minimal) {
    throw Error(ErrorCode::kNotMinimal, "atoms require a minimal DFA");
  }
  Dfa base = (minimal && reachable_states(d).all()) ? d : minimize(d);
  if (base.final_states().none()) {
    throw Error(ErrorCode::kEmptyLanguage, "atoms are defined for non-empty languages");
  }

  AtomSet s{base, determinize(reverse(to_nfa(base))), {}, {}, 0, {}};
  const auto& subsets = s.reverse_subset.subset_labels();

  std::vector<std::pair<AtomSignature, State>> found;
  for (State t = 0; t < s.reverse_subset.state_count(); ++t) {
    if (subsets[t].any()) found.emplace_back(subsets[t], t);
  }
  const StateSet& eps_signature = s.base.final_states();
  std::sort(found.begin(), found.end(), [&](const auto& x, const auto& y) {
    bool x_final = x.first == eps_signature;
    bool y_final = y.first == eps_signature;
    if (x_final != y_final) return y_final;
    return signature_less(x.first, y.first);
  });

  for (auto& [signature, state] : found) {
    s.atoms.push_back(signature);
    s.subset_state.push_back(state);
  }
  s.final_index = s.atoms.size() - 1;
  for (std::size_t i = 0; i < s.atoms.size(); ++i) {
    if (s.atoms[i].test(s.base.start())) s.initial_indices.push_back(i);
  }
  return s;
}

Dfa atom_recognizer(const AtomSet& s, std::size_t i) {
  StateSet accepting(s.reverse_subset.state_count());
  accepting.set(s.subset_state.at(i));
  return recognizer_for_states(s, accepting);
}

Dfa atom_union_recognizer(const AtomSet& s, std::span<const std::size_t> atoms) {
  StateSet accepting(s.reverse_subset.state_count());
  for (std::size_t i : atoms) accepting.set(s.subset_state.at(i));
  return recognizer_for_states(s, accepting);
}

std::vector<std::size_t> quotient_as_atoms(const AtomSet& s, State q) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.atoms[i].test(q)) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> atom_quotient(const AtomSet& s, std::size_t i,
                                       const Word& w) {
  // sig(wx) is reached from sig(x) in reverse_subset by reading w backwards.
  std::vector<std::size_t> out;
  const State target = s.subset_state.at(i);
  for (std::size_t j = 0; j < s.size(); ++j) {
    State t = s.subset_state[j];
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = s.reverse_subset.next(t, *it);
    if (t == target) out.push_back(j);
  }
  return out;
}

Word atom_witness(const AtomSet& s, std::size_t i) {
  auto w = shortest_word(atom_recognizer(s, i));
  if (!w) throw std::logic_error("atom recognizer accepts nothing");
  return *w;
}

std::string signature_name(const AtomSet& s, std::size_t i) {
  const auto& signature = s.atoms.at(i);
  const bool separated = signature.size() >= 10;
  std::string out;
  for (std::size_t q = 0; q < signature.size(); ++q) {
    if (separated && q > 0) out += '.';
    if (!signature.test(q)) out += '-';
    out += std::to_string(q + 1);
  }
  return out;
}

Atomaton atomaton_direct(const Dfa& d) {
  AtomSet s = compute_atoms(d);
  const std::size_t m = s.size();
  const std::size_t k = s.base.alphabet().size();

  std::vector<Dfa> recognizers;
  for (std::size_t i = 0; i < m; ++i) recognizers.push_back(atom_recognizer(s, i));

  Nfa nfa(s.base.alphabet(), m);
  for (std::size_t i = 0; i < m; ++i) {
    const Dfa& ri = recognizers[i];
    for (Symbol a = 0; a < k; ++a) {
      // a^{-1} A_i
      Dfa quotient = with_start(ri, ri.next(ri.start(), a));
      for (std::size_t j = 0; j < m; ++j) {
        if (subset_of(recognizers[j], quotient)) {
          nfa.add_transition(static_cast<State>(i), a, static_cast<State>(j));
        }
      }
    }
    nfa.set_label(static_cast<State>(i), signature_name(s, i));
  }
  for (std::size_t i : s.initial_indices) nfa.set_initial(static_cast<State>(i));
  nfa.set_final(static_cast<State>(s.final_index));
  return {std::move(nfa), s.atoms};
}

Atomaton atomaton_reverse_route(const Nfa& n) {
  Dfa reversed_min = minimize(determinize(reverse(n)));
  if (reversed_min.final_states().none()) {
    throw Error(ErrorCode::kEmptyLanguage, "the atomaton of the empty language is undefined");
  }
  Nfa result = reverse(to_nfa(to_idfa(reversed_min)));
  return label_by_atoms(std::move(result), compute_atoms(determinize(n)));
}

Atomaton symmetric_shortcut(const Dfa& d) {
  Dfa base = minimize(d);
  if (base.final_states().none()) {
    throw Error(ErrorCode::kEmptyLanguage, "the atomaton of the empty language is undefined");
  }
  if (!equivalent(base, determinize(reverse(to_nfa(base))))) {
    throw Error(ErrorCode::kNotSymmetric, "the language differs from its reverse");
  }
  Nfa result = reverse(to_nfa(to_idfa(base)));
  return label_by_atoms(std::move(result), compute_atoms(base));
}

BideterminismCheck check_bideterministic_characterization(
    const Regex& r, const Alphabet& alphabet) {
  Dfa d = quotient_dfa(r, alphabet);
  if (d.final_states().none()) {
    throw Error(ErrorCode::kEmptyLanguage, "the atomaton of the empty language is undefined");
  }
  Atomaton a = atomaton_direct(d);
  Idfa quotient_idfa = to_idfa(d);
  return {is_isomorphic(a.nfa, to_nfa(quotient_idfa)),
          is_bideterministic(quotient_idfa)};
}

}  // namespace atomaton
