#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace atomaton {

using State = std::uint32_t;
using Symbol = std::uint32_t;
/// A word is a sequence of symbol indices; the empty vector is epsilon.
using Word = std::vector<Symbol>;
using StateSet = boost::dynamic_bitset<>;

inline constexpr State kNoState = std::numeric_limits<State>::max();

/// Ordered set of distinct single-character symbols. The position of a
/// character is its symbol index.
class Alphabet {
 public:
  explicit Alphabet(std::string_view symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  char symbol(Symbol s) const { return symbols_.at(s); }
  std::optional<Symbol> find(char c) const noexcept;
  const std::string& symbols() const noexcept { return symbols_; }

  /// "%" and "" both denote the empty word.
  Word parse_word(std::string_view text) const;
  /// The empty word is rendered as "%".
  std::string format_word(const Word& w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

struct Transition {
  State from;
  Symbol symbol;
  State to;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Nondeterministic automaton without epsilon transitions. Labels are
/// display metadata only and never affect semantics.
class Nfa {
 public:
  Nfa(Alphabet alphabet, std::size_t state_count);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return state_count_; }

  State add_state();
  /// Adding an existing transition is a no-op.
  void add_transition(State from, Symbol symbol, State to);
  void set_initial(State q, bool value = true);
  void set_final(State q, bool value = true);
  void set_initial(const StateSet& states);
  void set_final(const StateSet& states);

  bool is_initial(State q) const { return initial_.test(q); }
  bool is_final(State q) const { return final_.test(q); }
  const StateSet& initial_states() const noexcept { return initial_; }
  const StateSet& final_states() const noexcept { return final_; }

  /// Sorted, duplicate-free successors of q on symbol.
  std::span<const State> successors(State q, Symbol symbol) const {
    return succ_[index(q, symbol)];
  }
  std::vector<Transition> transitions() const;
  std::size_t transition_count() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  void set_label(State q, std::string label);
  /// The label, or the decimal state index when unlabeled.
  std::string state_name(State q) const;

  /// At most one initial state and at most one successor per (state, symbol).
  bool is_deterministic() const;

  friend bool operator==(const Nfa&, const Nfa&) = default;

 private:
  std::size_t index(State q, Symbol a) const {
    return static_cast<std::size_t>(q) * alphabet_.size() + a;
  }
  void check_state(State q) const;

  Alphabet alphabet_;
  std::size_t state_count_;
  std::vector<std::vector<State>> succ_;
  StateSet initial_;
  StateSet final_;
  std::vector<std::string> labels_;
};

namespace detail {

/// Shared storage for complete and partial deterministic automata.
class DeterministicBase {
 public:
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return state_count_; }

  State start() const noexcept { return start_; }
  void set_start(State q);

  bool is_final(State q) const { return final_.test(q); }
  const StateSet& final_states() const noexcept { return final_; }
  void set_final(State q, bool value = true);
  void set_final(const StateSet& states);

  bool has_labels() const noexcept { return !labels_.empty(); }
  void set_label(State q, std::string label);
  std::string state_name(State q) const;

  /// Per-state origin subsets, present on determinization results.
  const std::vector<StateSet>& subset_labels() const noexcept {
    return subset_labels_;
  }
  void set_subset_labels(std::vector<StateSet> labels);

  friend bool operator==(const DeterministicBase&,
                         const DeterministicBase&) = default;

 protected:
  DeterministicBase(Alphabet alphabet, std::size_t state_count,
                    State fill);

  std::size_t index(State q, Symbol a) const {
    return static_cast<std::size_t>(q) * alphabet_.size() + a;
  }
  void check_state(State q) const;
  void check_symbol(Symbol a) const;

  Alphabet alphabet_;
  std::size_t state_count_;
  std::vector<State> next_;
  State start_ = 0;
  StateSet final_;
  std::vector<std::string> labels_;
  std::vector<StateSet> subset_labels_;
};

}  // namespace detail

/// Complete DFA. A fresh Dfa has every transition looping on its source.
class Dfa : public detail::DeterministicBase {
 public:
  Dfa(Alphabet alphabet, std::size_t state_count);

  State next(State q, Symbol a) const { return next_[index(q, a)]; }
  void set_next(State q, Symbol a, State to);

  State run(State from, const Word& w) const;
  bool accepts(const Word& w) const { return is_final(run(start_, w)); }

  friend bool operator==(const Dfa&, const Dfa&) = default;
};

/// Deterministic automaton with a partial transition function. Undefined
/// transitions are kNoState.
class Idfa : public detail::DeterministicBase {
 public:
  Idfa(Alphabet alphabet, std::size_t state_count);

  State next(State q, Symbol a) const { return next_[index(q, a)]; }
  void set_next(State q, Symbol a, State to);
  void clear_next(State q, Symbol a);

  /// kNoState once a transition is undefined.
  State run(State from, const Word& w) const;
  bool accepts(const Word& w) const;

  friend bool operator==(const Idfa&, const Idfa&) = default;
};

}  // namespace atomaton
