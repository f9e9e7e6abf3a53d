#include "atomaton/language.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <utility>

#include "atomaton/error.hpp"
#include "atomaton/operations.hpp"

namespace atomaton {

Dfa product(const Dfa& a, const Dfa& b, ProductMode mode) {
  if (a.alphabet() != b.alphabet()) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "alphabets '" + a.alphabet().symbols() + "' and '" +
                    b.alphabet().symbols() + "' differ");
  }
  const std::size_t k = a.alphabet().size();
  auto pair_key = [&](State p, State q) {
    return static_cast<std::uint64_t>(p) * b.state_count() + q;
  };

  std::unordered_map<std::uint64_t, State> index;
  std::vector<std::pair<State, State>> pairs;
  std::vector<State> table;
  auto intern = [&](State p, State q) {
    auto [it, inserted] =
        index.emplace(pair_key(p, q), static_cast<State>(pairs.size()));
    if (inserted) pairs.emplace_back(p, q);
    return it->second;
  };

  intern(a.start(), b.start());
  for (std::size_t cur = 0; cur < pairs.size(); ++cur) {
    auto [p, q] = pairs[cur];
    for (Symbol s = 0; s < k; ++s) table.push_back(intern(a.next(p, s), b.next(q, s)));
  }

  Dfa out(a.alphabet(), pairs.size());
  for (State i = 0; i < pairs.size(); ++i) {
    for (Symbol s = 0; s < k; ++s) out.set_next(i, s, table[i * k + s]);
    auto [p, q] = pairs[i];
    bool accept = mode == ProductMode::kAnd ? (a.is_final(p) && b.is_final(q))
                                            : (a.is_final(p) && !b.is_final(q));
    out.set_final(i, accept);
  }
  out.set_start(0);
  return out;
}

Dfa complement(const Dfa& d) {
  Dfa out = d;
  StateSet flipped = d.final_states();
  flipped.flip();
  out.set_final(flipped);
  return out;
}

Dfa universal_dfa(const Alphabet& alphabet) {
  Dfa d(alphabet, 1);
  d.set_final(0);
  return d;
}

Dfa empty_dfa(const Alphabet& alphabet) { return Dfa(alphabet, 1); }

std::optional<Word> shortest_word(const Dfa& d) {
  const std::size_t k = d.alphabet().size();
  std::vector<State> parent(d.state_count(), kNoState);
  std::vector<Symbol> via(d.state_count(), 0);
  std::vector<bool> seen(d.state_count(), false);
  std::deque<State> queue{d.start()};
  seen[d.start()] = true;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    if (d.is_final(q)) {
      Word w;
      for (State cur = q; parent[cur] != kNoState; cur = parent[cur]) {
        w.push_back(via[cur]);
      }
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (Symbol a = 0; a < k; ++a) {
      State r = d.next(q, a);
      if (!seen[r]) {
        seen[r] = true;
        parent[r] = q;
        via[r] = a;
        queue.push_back(r);
      }
    }
  }
  return std::nullopt;
}

bool is_empty(const Dfa& d) {
  StateSet live = reachable_states(d);
  return !live.intersects(d.final_states());
}

bool subset_of(const Dfa& a, const Dfa& b) {
  return is_empty(product(a, b, ProductMode::kAndNot));
}

bool equivalent(const Dfa& a, const Dfa& b) {
  return subset_of(a, b) && subset_of(b, a);
}

std::optional<Word> distinguishing_word(const Dfa& a, const Dfa& b) {
  auto left = shortest_word(product(a, b, ProductMode::kAndNot));
  auto right = shortest_word(product(b, a, ProductMode::kAndNot));
  if (!left) return right;
  if (!right) return left;
  if (right->size() < left->size() ||
      (right->size() == left->size() && *right < *left)) {
    return right;
  }
  return left;
}

bool equivalent(const Nfa& a, const Nfa& b) {
  return equivalent(determinize(a), determinize(b));
}

}  // namespace atomaton
