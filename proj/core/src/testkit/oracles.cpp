#include "atomaton/testkit/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "atomaton/error.hpp"
#include "atomaton/operations.hpp"

namespace atomaton::testkit {

std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Symbol a = 0; a < alphabet.size(); ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

StateSet oracle_signature(const Dfa& d, const Word& w) {
  StateSet out(d.state_count());
  for (State q = 0; q < d.state_count(); ++q) {
    if (d.is_final(d.run(q, w))) out.set(q);
  }
  return out;
}

std::vector<StateSet> oracle_atoms(const Dfa& d, std::size_t max_len) {
  using Tuple = std::vector<State>;
  const std::size_t n = d.state_count();
  std::vector<StateSet> out;
  Tuple identity(n);
  for (State q = 0; q < n; ++q) identity[q] = q;
  std::set<Tuple> seen{identity};
  std::vector<std::pair<Word, Tuple>> level{{Word{}, identity}};
  for (std::size_t len = 0; !level.empty(); ++len) {
    std::vector<std::pair<Word, Tuple>> following;
    for (const auto& [w, t] : level) {
      StateSet s = oracle_signature(d, w);
      if (s.any()) out.push_back(std::move(s));
      if (len == max_len) continue;
      for (Symbol a = 0; a < d.alphabet().size(); ++a) {
        Tuple u(n);
        for (State q = 0; q < n; ++q) u[q] = d.next(t[q], a);
        if (!seen.insert(u).second) continue;
        Word v = w;
        v.push_back(a);
        following.emplace_back(std::move(v), std::move(u));
      }
    }
    level = std::move(following);
  }
  auto numeric_less = [](const StateSet& a, const StateSet& b) {
    for (std::size_t q = a.size(); q-- > 0;) {
      if (a.test(q) != b.test(q)) return b.test(q);
    }
    return false;
  };
  std::sort(out.begin(), out.end(), numeric_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool oracle_equivalent(const Nfa& a, const Nfa& b, std::size_t max_len) {
  if (!(a.alphabet() == b.alphabet())) {
    throw Error(ErrorCode::kAlphabetMismatch, "automata use different alphabets");
  }
  for (const Word& w : enumerate_words(a.alphabet(), max_len)) {
    if (accepts(a, w) != accepts(b, w)) return false;
  }
  return true;
}

Dfa track_recognizer(const Dfa& d, const StateSet& signature) {
  using Tuple = std::vector<State>;
  const std::size_t n = d.state_count();
  const std::size_t k = d.alphabet().size();

  Tuple identity(n);
  for (State q = 0; q < n; ++q) identity[q] = q;
  std::map<Tuple, State> id{{identity, 0}};
  std::vector<Tuple> tuples{identity};
  std::vector<std::vector<State>> next;

  for (std::size_t i = 0; i < tuples.size(); ++i) {
    next.emplace_back(k);
    for (Symbol a = 0; a < k; ++a) {
      Tuple t(n);
      for (State q = 0; q < n; ++q) t[q] = d.next(tuples[i][q], a);
      auto [it, fresh] = id.emplace(t, static_cast<State>(tuples.size()));
      if (fresh) tuples.push_back(std::move(t));
      next[i][a] = it->second;
    }
  }

  Dfa out(d.alphabet(), tuples.size());
  for (State i = 0; i < tuples.size(); ++i) {
    StateSet s(n);
    for (State q = 0; q < n; ++q) {
      if (d.is_final(tuples[i][q])) s.set(q);
    }
    out.set_final(i, s == signature);
    for (Symbol a = 0; a < k; ++a) out.set_next(i, a, next[i][a]);
  }
  return out;
}

}  // namespace atomaton::testkit
