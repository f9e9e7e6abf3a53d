#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atomaton/automata.hpp"

namespace atomaton {

/// Immutable regular-expression tree in similarity-normal form.
///
/// The factory functions keep every node normalized: unions are flattened,
/// sorted, de-duplicated and free of ∅; concatenations are flattened, absorb
/// ∅ and drop ε; star(star r) = star r. Two expressions with equal keys are
/// structurally identical.
class Regex {
 public:
  enum class Kind { kEmpty, kEpsilon, kSymbol, kUnion, kConcat, kStar, kPlus };

  static Regex empty();
  static Regex epsilon();
  static Regex symbol(Symbol a);
  static Regex union_of(std::vector<Regex> parts);
  static Regex concat(std::vector<Regex> parts);
  static Regex star(const Regex& r);
  static Regex plus(const Regex& r);

  Kind kind() const noexcept { return node_->kind; }
  /// Only meaningful for kSymbol.
  Symbol symbol_index() const noexcept { return node_->symbol; }
  std::span<const Regex> children() const noexcept { return node_->children; }
  /// Canonical identity; total order used for union normalization.
  const std::string& key() const noexcept { return node_->key; }
  bool nullable() const noexcept { return node_->nullable; }

  friend bool operator==(const Regex& a, const Regex& b) {
    return a.key() == b.key();
  }
  friend bool operator<(const Regex& a, const Regex& b) {
    return a.key() < b.key();
  }

 private:
  struct Node {
    Kind kind;
    Symbol symbol = 0;
    std::vector<Regex> children;
    std::string key;
    bool nullable = false;
  };

  explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Regex make(Kind kind, Symbol symbol, std::vector<Regex> children);

  std::shared_ptr<const Node> node_;
};

/// Grammar: single-character symbols from `alphabet`, `|` union,
/// juxtaposition, postfix `*` and `+`, parentheses, `%` for ε, `#` for ∅.
/// Whitespace is ignored. Throws SyntaxError or UnknownSymbol with the
/// character offset.
Regex parse_regex(std::string_view text, const Alphabet& alphabet);

/// The distinct non-operator characters of `text`, sorted.
Alphabet alphabet_of(std::string_view text);

/// Printed normal form; parse_regex(to_string(r, A), A) == r.
std::string to_string(const Regex& r, const Alphabet& alphabet);

bool nullable(const Regex& r);

/// Brzozowski derivative a^{-1}L(r), in normal form.
Regex derivative(const Regex& r, Symbol a);
Regex quotient_by_word(const Regex& r, const Word& w);

inline constexpr std::size_t kDefaultDerivativeBound = 10'000;

/// Automaton of the distinct derivatives of r, followed by a
/// partition-refinement pass, so the result is the minimal complete DFA of
/// L(r). Throws DerivativeBlowup if more than `bound` derivatives appear.
Dfa quotient_dfa(const Regex& r, const Alphabet& alphabet,
                 std::size_t bound = kDefaultDerivativeBound);

/// Thompson construction with ε-transitions removed by forward closure,
/// restricted to the states reachable from the initial state.
Nfa thompson_nfa(const Regex& r, const Alphabet& alphabet);

}  // namespace atomaton
