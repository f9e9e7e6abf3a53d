#include "atomaton/automata.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "atomaton/error.hpp"

namespace atomaton {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "alphabet must be non-empty");
  }
  std::string sorted = symbols_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "alphabet '" + symbols_ + "' repeats a symbol");
  }
}

std::optional<Symbol> Alphabet::find(char c) const noexcept {
  auto pos = symbols_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Symbol>(pos);
}

Word Alphabet::parse_word(std::string_view text) const {
  Word w;
  if (text == "%") return w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto s = find(text[i]);
    if (!s) {
      throw Error(ErrorCode::kUnknownSymbol,
                  std::string("'") + text[i] + "' is not in the alphabet", i);
    }
    w.push_back(*s);
  }
  return w;
}

std::string Alphabet::format_word(const Word& w) const {
  if (w.empty()) return "%";
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(symbol(s));
  return out;
}

// Nfa

Nfa::Nfa(Alphabet alphabet, std::size_t state_count)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      succ_(state_count * alphabet_.size()),
      initial_(state_count),
      final_(state_count) {}

void Nfa::check_state(State q) const {
  if (q >= state_count_) {
    throw Error(ErrorCode::kInvalidArgument,
                "state " + std::to_string(q) + " out of range");
  }
}

State Nfa::add_state() {
  auto q = static_cast<State>(state_count_++);
  succ_.resize(state_count_ * alphabet_.size());
  initial_.push_back(false);
  final_.push_back(false);
  if (!labels_.empty()) labels_.emplace_back();
  return q;
}

void Nfa::add_transition(State from, Symbol symbol, State to) {
  check_state(from);
  check_state(to);
  if (symbol >= alphabet_.size()) {
    throw Error(ErrorCode::kUnknownSymbol,
                "symbol index " + std::to_string(symbol) + " out of range");
  }
  auto& targets = succ_[index(from, symbol)];
  auto it = std::lower_bound(targets.begin(), targets.end(), to);
  if (it == targets.end() || *it != to) targets.insert(it, to);
}

void Nfa::set_initial(State q, bool value) {
  check_state(q);
  initial_.set(q, value);
}

void Nfa::set_final(State q, bool value) {
  check_state(q);
  final_.set(q, value);
}

void Nfa::set_initial(const StateSet& states) {
  if (states.size() != state_count_) {
    throw Error(ErrorCode::kInvalidArgument, "initial set has wrong width");
  }
  initial_ = states;
}

void Nfa::set_final(const StateSet& states) {
  if (states.size() != state_count_) {
    throw Error(ErrorCode::kInvalidArgument, "final set has wrong width");
  }
  final_ = states;
}

std::vector<Transition> Nfa::transitions() const {
  std::vector<Transition> out;
  for (State q = 0; q < state_count_; ++q) {
    for (Symbol a = 0; a < alphabet_.size(); ++a) {
      for (State r : successors(q, a)) out.push_back({q, a, r});
    }
  }
  return out;
}

std::size_t Nfa::transition_count() const {
  std::size_t n = 0;
  for (const auto& targets : succ_) n += targets.size();
  return n;
}

void Nfa::set_label(State q, std::string label) {
  check_state(q);
  if (labels_.empty()) labels_.resize(state_count_);
  labels_[q] = std::move(label);
}

std::string Nfa::state_name(State q) const {
  if (!labels_.empty() && !labels_[q].empty()) return labels_[q];
  return std::to_string(q);
}

bool Nfa::is_deterministic() const {
  if (initial_.count() > 1) return false;
  return std::all_of(succ_.begin(), succ_.end(),
                     [](const auto& targets) { return targets.size() <= 1; });
}

// Deterministic automata

namespace detail {

DeterministicBase::DeterministicBase(Alphabet alphabet,
                                     std::size_t state_count, State fill)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      next_(state_count * alphabet_.size(), fill),
      final_(state_count) {
  if (state_count == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "deterministic automaton needs a start state");
  }
}

void DeterministicBase::check_state(State q) const {
  if (q >= state_count_) {
    throw Error(ErrorCode::kInvalidArgument,
                "state " + std::to_string(q) + " out of range");
  }
}

void DeterministicBase::check_symbol(Symbol a) const {
  if (a >= alphabet_.size()) {
    throw Error(ErrorCode::kUnknownSymbol,
                "symbol index " + std::to_string(a) + " out of range");
  }
}

void DeterministicBase::set_start(State q) {
  check_state(q);
  start_ = q;
}

void DeterministicBase::set_final(State q, bool value) {
  check_state(q);
  final_.set(q, value);
}

void DeterministicBase::set_final(const StateSet& states) {
  if (states.size() != state_count_) {
    throw Error(ErrorCode::kInvalidArgument, "final set has wrong width");
  }
  final_ = states;
}

void DeterministicBase::set_label(State q, std::string label) {
  check_state(q);
  if (labels_.empty()) labels_.resize(state_count_);
  labels_[q] = std::move(label);
}

std::string DeterministicBase::state_name(State q) const {
  if (!labels_.empty() && !labels_[q].empty()) return labels_[q];
  return std::to_string(q);
}

void DeterministicBase::set_subset_labels(std::vector<StateSet> labels) {
  if (!labels.empty() && labels.size() != state_count_) {
    throw Error(ErrorCode::kInvalidArgument, "subset labels have wrong count");
  }
  subset_labels_ = std::move(labels);
}

}  // namespace detail

Dfa::Dfa(Alphabet alphabet, std::size_t state_count)
    : DeterministicBase(std::move(alphabet), state_count, 0) {
  for (State q = 0; q < state_count_; ++q) {
    for (Symbol a = 0; a < alphabet_.size(); ++a) next_[index(q, a)] = q;
  }
}

void Dfa::set_next(State q, Symbol a, State to) {
  check_state(q);
  check_state(to);
  check_symbol(a);
  next_[index(q, a)] = to;
}

State Dfa::run(State from, const Word& w) const {
  State q = from;
  for (Symbol a : w) q = next(q, a);
  return q;
}

Idfa::Idfa(Alphabet alphabet, std::size_t state_count)
    : DeterministicBase(std::move(alphabet), state_count, kNoState) {}

void Idfa::set_next(State q, Symbol a, State to) {
  check_state(q);
  check_state(to);
  check_symbol(a);
  next_[index(q, a)] = to;
}

void Idfa::clear_next(State q, Symbol a) {
  check_state(q);
  check_symbol(a);
  next_[index(q, a)] = kNoState;
}

State Idfa::run(State from, const Word& w) const {
  State q = from;
  for (Symbol a : w) {
    if (q == kNoState) break;
    q = next(q, a);
  }
  return q;
}

bool Idfa::accepts(const Word& w) const {
  State q = run(start_, w);
  return q != kNoState && is_final(q);
}

}  // namespace atomaton
