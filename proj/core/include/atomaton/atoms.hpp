#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "atomaton/automata.hpp"
#include "atomaton/regex.hpp"

namespace atomaton {

/// States of the base minimal DFA whose quotients appear uncomplemented in
/// an atom. Never empty.
using AtomSignature = StateSet;

/// The atoms of a non-empty regular language L.
///
/// `base` is the minimal complete DFA of L; its state q stands for the
/// quotient L_q. Atom i is the set of words w whose membership vector
/// { q : w ∈ L_q } equals atoms[i]. The final atom (the one holding ε) is
/// always last; the others are ordered by signature value.
struct AtomSet {
  Dfa base;
  /// determinize(reverse(base)). Its state reached on w^R is the signature
  /// of w.
  Dfa reverse_subset;
  std::vector<AtomSignature> atoms;
  /// State of reverse_subset holding each atom's signature.
  std::vector<State> subset_state;
  std::size_t final_index = 0;
  std::vector<std::size_t> initial_indices;

  std::size_t size() const noexcept { return atoms.size(); }
  bool is_initial(std::size_t i) const { return atoms.at(i).test(base.start()); }
};

struct AtomOptions {
  /// Reject non-minimal input with NotMinimal instead of minimizing it.
  bool strict = false;
};

/// A minimal d with every state reachable is used as the base unchanged, so
/// its state indices carry over. Throws EmptyLanguage.
AtomSet compute_atoms(const Dfa& d, AtomOptions options = {});

/// Minimal DFA accepting exactly atom i.
Dfa atom_recognizer(const AtomSet& s, std::size_t i);
/// Minimal DFA accepting the union of the given atoms.
Dfa atom_union_recognizer(const AtomSet& s, std::span<const std::size_t> atoms);

/// Atoms whose union is the quotient L_q; empty for the empty quotient.
std::vector<std::size_t> quotient_as_atoms(const AtomSet& s, State q);

/// Atoms whose union is w^{-1} A_i.
std::vector<std::size_t> atom_quotient(const AtomSet& s, std::size_t i,
                                       const Word& w);

/// Shortest word of atom i, first in alphabet order among equals.
Word atom_witness(const AtomSet& s, std::size_t i);

/// Signature with every base position spelled out, complemented positions
/// prefixed by '-': "123", "-1-23". Positions are 1-based; with ten or more
/// base states they are separated by '.'.
std::string signature_name(const AtomSet& s, std::size_t i);

/// NFA whose states are the atoms of L, with A_i -a-> A_j iff aA_j ⊆ A_i.
struct Atomaton {
  Nfa nfa;
  std::vector<AtomSignature> signature_of;
};

/// Builds the transition relation from containment tests between atom
/// recognizers. State i is atom i of compute_atoms(d).
Atomaton atomaton_direct(const Dfa& d);

/// reverse, determinize, minimize, trim, reverse; signatures are recovered
/// by matching each state's right language against the atom recognizers.
Atomaton atomaton_reverse_route(const Nfa& n);

/// For L = L^R: the trimmed reverse of the minimal DFA. Throws NotSymmetric
/// otherwise.
Atomaton symmetric_shortcut(const Dfa& d);

struct BideterminismCheck {
  bool atomaton_is_quotient_idfa = false;
  bool language_bideterministic = false;
};

BideterminismCheck check_bideterministic_characterization(
    const Regex& r, const Alphabet& alphabet);

}  // namespace atomaton
