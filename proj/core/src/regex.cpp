#include "atomaton/regex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "atomaton/error.hpp"
#include "atomaton/operations.hpp"

namespace atomaton {

// Construction and normalization.

Regex Regex::make(Kind kind, Symbol symbol, std::vector<Regex> children) {
  std::string key;
  bool is_nullable = false;
  auto join = [&](char sep) {
    std::string out;
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i > 0) out += sep;
      out += children[i].key();
    }
    return out;
  };
  switch (kind) {
    case Kind::kEmpty:
      key = "#";
      break;
    case Kind::kEpsilon:
      key = "%";
      is_nullable = true;
      break;
    case Kind::kSymbol:
      key = "'" + std::to_string(symbol);
      break;
    case Kind::kUnion:
      key = "(" + join('|') + ")";
      is_nullable = std::any_of(children.begin(), children.end(),
                                [](const Regex& r) { return r.nullable(); });
      break;
    case Kind::kConcat:
      key = "[" + join('.') + "]";
      is_nullable = std::all_of(children.begin(), children.end(),
                                [](const Regex& r) { return r.nullable(); });
      break;
    case Kind::kStar:
      key = "{" + children.front().key() + "}*";
      is_nullable = true;
      break;
    case Kind::kPlus:
      key = "{" + children.front().key() + "}+";
      is_nullable = children.front().nullable();
      break;
  }
  return Regex(std::make_shared<const Node>(
      Node{kind, symbol, std::move(children), std::move(key), is_nullable}));
}

Regex Regex::empty() { return make(Kind::kEmpty, 0, {}); }
Regex Regex::epsilon() { return make(Kind::kEpsilon, 0, {}); }
Regex Regex::symbol(Symbol a) { return make(Kind::kSymbol, a, {}); }

Regex Regex::union_of(std::vector<Regex> parts) {
  std::vector<Regex> flat;
  for (auto& part : parts) {
    if (part.kind() == Kind::kUnion) {
      flat.insert(flat.end(), part.children().begin(), part.children().end());
    } else if (part.kind() != Kind::kEmpty) {
      flat.push_back(std::move(part));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return empty();
  if (flat.size() == 1) return flat.front();
  return make(Kind::kUnion, 0, std::move(flat));
}

Regex Regex::concat(std::vector<Regex> parts) {
  std::vector<Regex> flat;
  for (auto& part : parts) {
    switch (part.kind()) {
      case Kind::kEmpty:
        return empty();
      case Kind::kEpsilon:
        break;
      case Kind::kConcat:
        flat.insert(flat.end(), part.children().begin(), part.children().end());
        break;
      default:
        flat.push_back(std::move(part));
    }
  }
  if (flat.empty()) return epsilon();
  if (flat.size() == 1) return flat.front();
  return make(Kind::kConcat, 0, std::move(flat));
}

Regex Regex::star(const Regex& r) {
  switch (r.kind()) {
    case Kind::kEmpty:
    case Kind::kEpsilon:
      return epsilon();
    case Kind::kStar:
      return r;
    case Kind::kPlus:
      return star(r.children().front());
    default:
      return make(Kind::kStar, 0, {r});
  }
}

Regex Regex::plus(const Regex& r) {
  switch (r.kind()) {
    case Kind::kEmpty:
    case Kind::kEpsilon:
    case Kind::kStar:
    case Kind::kPlus:
      return r;
    default:
      return make(Kind::kPlus, 0, {r});
  }
}

// Parsing.

namespace {

constexpr std::string_view kOperators = "|*+()%#";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  Regex parse() {
    Regex r = parse_union();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::kSyntaxError,
                message + " at offset " + std::to_string(pos_), pos_);
  }

  bool starts_atom() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '%' || c == '#' || kOperators.find(c) == std::string_view::npos;
  }

  Regex parse_union() {
    std::vector<Regex> parts{parse_concat()};
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == '|') {
      ++pos_;
      parts.push_back(parse_concat());
      skip_space();
    }
    return Regex::union_of(std::move(parts));
  }

  Regex parse_concat() {
    if (!starts_atom()) {
      fail(pos_ < text_.size() ? "expected an expression before '" +
                                      std::string(1, text_[pos_]) + "'"
                               : "expected an expression");
    }
    std::vector<Regex> parts;
    while (starts_atom()) parts.push_back(parse_postfix());
    return Regex::concat(std::move(parts));
  }

  Regex parse_postfix() {
    Regex r = parse_atom();
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        r = Regex::star(r);
      } else if (pos_ < text_.size() && text_[pos_] == '+') {
        ++pos_;
        r = Regex::plus(r);
      } else {
        return r;
      }
    }
  }

  Regex parse_atom() {
    skip_space();
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Regex inner = parse_union();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (c == '%') {
      ++pos_;
      return Regex::epsilon();
    }
    if (c == '#') {
      ++pos_;
      return Regex::empty();
    }
    auto symbol = alphabet_.find(c);
    if (!symbol) {
      throw Error(ErrorCode::kUnknownSymbol,
                  std::string("'") + c + "' at offset " + std::to_string(pos_) +
                      " is not in the alphabet",
                  pos_);
    }
    ++pos_;
    return Regex::symbol(*symbol);
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

int precedence(Regex::Kind kind) {
  switch (kind) {
    case Regex::Kind::kUnion: return 0;
    case Regex::Kind::kConcat: return 1;
    default: return 2;
  }
}

void print(const Regex& r, const Alphabet& alphabet, int needed,
           std::string& out) {
  bool parens = precedence(r.kind()) < needed;
  if (parens) out += '(';
  switch (r.kind()) {
    case Regex::Kind::kEmpty:
      out += '#';
      break;
    case Regex::Kind::kEpsilon:
      out += '%';
      break;
    case Regex::Kind::kSymbol:
      out += alphabet.symbol(r.symbol_index());
      break;
    case Regex::Kind::kUnion: {
      bool first = true;
      for (const auto& child : r.children()) {
        if (!first) out += '|';
        print(child, alphabet, 1, out);
        first = false;
      }
      break;
    }
    case Regex::Kind::kConcat:
      for (const auto& child : r.children()) print(child, alphabet, 1, out);
      break;
    case Regex::Kind::kStar:
      print(r.children().front(), alphabet, 2, out);
      out += '*';
      break;
    case Regex::Kind::kPlus:
      print(r.children().front(), alphabet, 2, out);
      out += '+';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
  return Parser(text, alphabet).parse();
}

Alphabet alphabet_of(std::string_view text) {
  std::set<char> symbols;
  for (char c : text) {
    if (!is_space(c) && kOperators.find(c) == std::string_view::npos) {
      symbols.insert(c);
    }
  }
  if (symbols.empty()) return Alphabet("a");
  return Alphabet(std::string(symbols.begin(), symbols.end()));
}

std::string to_string(const Regex& r, const Alphabet& alphabet) {
  std::string out;
  print(r, alphabet, 0, out);
  return out;
}

// Derivatives.

bool nullable(const Regex& r) { return r.nullable(); }

Regex derivative(const Regex& r, Symbol a) {
  using Kind = Regex::Kind;
  switch (r.kind()) {
    case Kind::kEmpty:
    case Kind::kEpsilon:
      return Regex::empty();
    case Kind::kSymbol:
      return r.symbol_index() == a ? Regex::epsilon() : Regex::empty();
    case Kind::kUnion: {
      std::vector<Regex> parts;
      for (const auto& child : r.children()) parts.push_back(derivative(child, a));
      return Regex::union_of(std::move(parts));
    }
    case Kind::kConcat: {
      auto children = r.children();
      Regex head = children.front();
      Regex tail = Regex::concat(std::vector<Regex>(children.begin() + 1, children.end()));
      Regex first = Regex::concat({derivative(head, a), tail});
      if (!head.nullable()) return first;
      return Regex::union_of({first, derivative(tail, a)});
    }
    case Kind::kStar:
      return Regex::concat({derivative(r.children().front(), a), r});
    case Kind::kPlus:
      return Regex::concat(
          {derivative(r.children().front(), a), Regex::star(r.children().front())});
  }
  return Regex::empty();
}

Regex quotient_by_word(const Regex& r, const Word& w) {
  Regex out = r;
  for (Symbol a : w) out = derivative(out, a);
  return out;
}

Dfa quotient_dfa(const Regex& r, const Alphabet& alphabet, std::size_t bound) {
  const std::size_t k = alphabet.size();
  std::map<std::string, State> index;
  std::vector<Regex> states;
  std::vector<State> table;
  auto intern = [&](const Regex& d) {
    auto [it, inserted] = index.emplace(d.key(), static_cast<State>(states.size()));
    if (inserted) {
      if (states.size() >= bound) {
        throw Error(ErrorCode::kDerivativeBlowup,
                    "more than " + std::to_string(bound) + " distinct derivatives");
      }
      states.push_back(d);
    }
    return it->second;
  };

  intern(r);
  for (std::size_t cur = 0; cur < states.size(); ++cur) {
    for (Symbol a = 0; a < k; ++a) {
      Regex d = derivative(states[cur], a);
      table.push_back(intern(d));
    }
  }

  Dfa d(alphabet, states.size());
  for (State q = 0; q < states.size(); ++q) {
    for (Symbol a = 0; a < k; ++a) d.set_next(q, a, table[q * k + a]);
    d.set_final(q, states[q].nullable());
  }
  d.set_start(0);
  return minimize(d);
}

// Thompson construction.

namespace {

struct EpsilonNfa {
  struct Edge {
    bool epsilon;
    Symbol symbol;
    State to;
  };
  std::vector<std::vector<Edge>> edges;

  State add() {
    edges.emplace_back();
    return static_cast<State>(edges.size() - 1);
  }
  void eps(State from, State to) { edges[from].push_back({true, 0, to}); }
  void sym(State from, Symbol a, State to) { edges[from].push_back({false, a, to}); }

  // Returns (start, accept) of the fragment for r.
  std::pair<State, State> build(const Regex& r) {
    using Kind = Regex::Kind;
    State s = add();
    State f = add();
    switch (r.kind()) {
      case Kind::kEmpty:
        break;
      case Kind::kEpsilon:
        eps(s, f);
        break;
      case Kind::kSymbol:
        sym(s, r.symbol_index(), f);
        break;
      case Kind::kUnion:
        for (const auto& child : r.children()) {
          auto [cs, cf] = build(child);
          eps(s, cs);
          eps(cf, f);
        }
        break;
      case Kind::kConcat: {
        State prev = s;
        for (const auto& child : r.children()) {
          auto [cs, cf] = build(child);
          eps(prev, cs);
          prev = cf;
        }
        eps(prev, f);
        break;
      }
      case Kind::kStar:
      case Kind::kPlus: {
        auto [cs, cf] = build(r.children().front());
        eps(s, cs);
        eps(cf, cs);
        eps(cf, f);
        if (r.kind() == Kind::kStar) eps(s, f);
        break;
      }
    }
    return {s, f};
  }

  std::vector<State> closure(State q) const {
    std::vector<bool> seen(edges.size(), false);
    std::vector<State> stack{q}, out;
    seen[q] = true;
    while (!stack.empty()) {
      State p = stack.back();
      stack.pop_back();
      out.push_back(p);
      for (const auto& e : edges[p]) {
        if (e.epsilon && !seen[e.to]) {
          seen[e.to] = true;
          stack.push_back(e.to);
        }
      }
    }
    return out;
  }
};

}  // namespace

Nfa thompson_nfa(const Regex& r, const Alphabet& alphabet) {
  EpsilonNfa e;
  auto [start, accept] = e.build(r);

  // Forward closure: p -a-> t whenever some q in closure(p) has q -a-> t.
  Nfa full(alphabet, e.edges.size());
  for (State p = 0; p < e.edges.size(); ++p) {
    for (State q : e.closure(p)) {
      if (q == accept) full.set_final(p);
      for (const auto& edge : e.edges[q]) {
        if (!edge.epsilon) full.add_transition(p, edge.symbol, edge.to);
      }
    }
  }
  full.set_initial(start);

  StateSet keep = reachable_states(full);
  std::vector<State> remap(full.state_count(), kNoState);
  State next_id = 0;
  for (State q = 0; q < full.state_count(); ++q) {
    if (keep.test(q)) remap[q] = next_id++;
  }
  Nfa out(alphabet, next_id);
  for (const auto& t : full.transitions()) {
    if (keep.test(t.from)) out.add_transition(remap[t.from], t.symbol, remap[t.to]);
  }
  for (State q = 0; q < full.state_count(); ++q) {
    if (!keep.test(q)) continue;
    out.set_initial(remap[q], full.is_initial(q));
    out.set_final(remap[q], full.is_final(q));
  }
  return out;
}

}  // namespace atomaton
