#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "../fixtures.hpp"
#include "../oracle.hpp"
#include "atomaton/atoms.hpp"
#include "atomaton/classifiers.hpp"
#include "atomaton/error.hpp"
#include "atomaton/isomorphism.hpp"
#include "atomaton/language.hpp"
#include "atomaton/operations.hpp"
#include "atomaton/regex.hpp"
#include "atomaton/testkit/generators.hpp"
#include "atomaton/testkit/oracles.hpp"

using namespace atomaton;
using namespace fixtures;

namespace {

Dfa dfa_of(const char* text) { return quotient_dfa(parse_regex(text, ab()), ab()); }

std::vector<Dfa> random_languages(std::size_t count, std::uint64_t first_seed,
                                  std::size_t max_states = 6) {
  std::vector<Dfa> out;
  for (std::uint64_t seed = first_seed; out.size() < count; ++seed) {
    testkit::GenParams p;
    p.seed = seed;
    p.regex_depth = 4;
    Dfa d = quotient_dfa(testkit::random_regex(p), ab());
    if (d.state_count() <= max_states) out.push_back(d);
  }
  return out;
}

/// Closed sets from membership vectors: P* is the intersection of all
/// signatures of words that lie in every quotient of P.
std::set<std::vector<bool>> closed_sets_by_signatures(const Dfa& d) {
  const std::size_t n = d.state_count();
  std::vector<StateSet> signatures;
  for (const Word& w : testkit::enumerate_words(d.alphabet(), 2 * n + 4)) {
    signatures.push_back(testkit::oracle_signature(d, w));
  }
  std::set<std::vector<bool>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<bool> closed(n, true);
    for (const StateSet& s : signatures) {
      bool covers = true;
      for (std::size_t q = 0; q < n; ++q) {
        if ((mask >> q) & 1U && !s.test(q)) covers = false;
      }
      if (!covers) continue;
      for (std::size_t q = 0; q < n; ++q) closed[q] = closed[q] && s.test(q);
    }
    out.insert(closed);
  }
  return out;
}

std::vector<bool> as_bools(const StateSet& s) {
  std::vector<bool> out(s.size());
  for (std::size_t q = 0; q < s.size(); ++q) out[q] = s.test(q);
  return out;
}

Nfa permuted(const Nfa& n, const std::vector<State>& perm) {
  Nfa out(n.alphabet(), n.state_count());
  for (const Transition& t : n.transitions()) out.add_transition(perm[t.from], t.symbol, perm[t.to]);
  for (State q = 0; q < n.state_count(); ++q) {
    if (n.is_initial(q)) out.set_initial(perm[q]);
    if (n.is_final(q)) out.set_final(perm[q]);
  }
  return out;
}

}  // namespace

TEST_SUITE("is_atomic") {
  TEST_CASE("atomaton is atomic, one atom per state") {
    AtomicityReport r = is_atomic(fig2_atm());
    CHECK(r.atomic);
    for (const StateAtomicity& e : r.per_state) {
      CHECK(e.is_union);
      CHECK(e.atoms.size() == 1);
      CHECK_FALSE(e.counterexample.has_value());
    }
  }

  TEST_CASE("deterministic automata are atomic") {
    CHECK(is_atomic(to_nfa(fig1_min())).atomic);
    CHECK(is_atomic(to_nfa(determinize(fig1_nfa()))).atomic);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      testkit::GenParams p;
      p.seed = seed;
      CHECK(is_atomic(trim(to_nfa(testkit::random_dfa(p)))).atomic);
    }
  }

  TEST_CASE("reverse of the figure one automaton is not atomic") {
    Nfa n = reverse(fig1_nfa());
    AtomicityReport r = is_atomic(n);
    CHECK_FALSE(r.atomic);
    std::size_t failing = 0;
    for (State q = 0; q < n.state_count(); ++q) {
      const StateAtomicity& e = r.per_state[q];
      if (e.is_union) continue;
      ++failing;
      REQUIRE(e.counterexample.has_value());
      Dfa right = right_language(n, q);
      Dfa joined = atom_union_recognizer(r.atom_set, e.atoms);
      CHECK(right.accepts(*e.counterexample) != joined.accepts(*e.counterexample));
    }
    CHECK(failing > 0);
  }

  TEST_CASE("empty right languages are unions of zero atoms") {
    Nfa n = to_nfa(fig1_min());
    AtomicityReport r = is_atomic(n);
    CHECK(r.atomic);
    CHECK(r.per_state[2].atoms.empty());
    CHECK(r.per_state[2].is_union);
  }

  TEST_CASE("empty language") {
    Nfa n(ab(), 1);
    n.set_initial(0);
    try {
      is_atomic(n);
      FAIL("expected an exception");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kEmptyLanguage);
    }
    CHECK_THROWS_AS(is_residual(n), Error);
  }

  TEST_CASE("verdict is invariant under relabeling") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      testkit::GenParams p;
      p.seed = seed;
      p.max_states = 5;
      Nfa n = testkit::random_nfa(p);
      std::vector<State> perm(n.state_count());
      std::iota(perm.begin(), perm.end(), 0);
      std::reverse(perm.begin(), perm.end());
      AtomicityReport a = is_atomic(n);
      AtomicityReport b = is_atomic(permuted(n, perm));
      CHECK(a.atomic == b.atomic);
      for (State q = 0; q < n.state_count(); ++q) {
        CHECK(a.per_state[q].is_union == b.per_state[perm[q]].is_union);
      }
    }
  }

  TEST_CASE("right languages of trim automata lie inside the atoms") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      testkit::GenParams p;
      p.seed = seed;
      p.max_states = 5;
      Nfa n = trim(testkit::random_nfa(p));
      AtomSet s = compute_atoms(determinize(n));
      std::vector<std::size_t> all(s.size());
      std::iota(all.begin(), all.end(), 0);
      Dfa everything = atom_union_recognizer(s, all);
      for (State q = 0; q < n.state_count(); ++q) {
        CHECK(subset_of(right_language(n, q), everything));
      }
    }
  }
}

TEST_SUITE("is_residual") {
  TEST_CASE("trim minimal dfa is residual") {
    Nfa n = to_nfa(to_idfa(fig2_dfa()));
    CHECK(is_residual(n).residual);
    CHECK(is_residual(to_nfa(fig1_min())).residual);
    CHECK(is_residual(to_nfa(to_idfa(fig1_min()))).residual);
  }

  TEST_CASE("atomaton of figure two is atomic but not residual") {
    CHECK_FALSE(is_residual(fig2_atm()).residual);
    CHECK(is_atomic(fig2_atm()).atomic);
  }

  TEST_CASE("generated residual automata are residual and atomic") {
    for (const Dfa& d : random_languages(60, 1)) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        Nfa n = testkit::random_residual_nfa(d, seed);
        CHECK(equivalent(n, to_nfa(d)));
        ResidualReport r = is_residual(n);
        CHECK(r.residual);
        CHECK(is_atomic(n).atomic);
      }
    }
  }
}

TEST_SUITE("factorizations") {
  TEST_CASE("figure two") {
    std::vector<Factorization> fs = factorizations(fig2_dfa());
    CHECK(fs.size() == 7);
    std::set<std::vector<bool>> found;
    for (const Factorization& f : fs) found.insert(as_bools(f.closed));
    CHECK(found == closed_sets_by_signatures(fig2_dfa()));
    CHECK(found.count({true, true, true}) == 1);
    CHECK(std::count_if(fs.begin(), fs.end(), [](const Factorization& f) { return f.empty_x; }) == 1);
  }

  TEST_CASE("universal language has a single factorization") {
    std::vector<Factorization> fs = factorizations(sigma_star());
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].closed.all());
    CHECK_FALSE(fs[0].empty_x);
    CHECK_FALSE(fs[0].empty_y);
  }

  TEST_CASE("closure of all states is itself") {
    for (const Dfa& d : random_languages(30, 200)) {
      std::vector<Factorization> fs = factorizations(d);
      CHECK(std::any_of(fs.begin(), fs.end(), [](const Factorization& f) { return f.closed.all(); }));
    }
  }

  TEST_CASE("closed sets agree with the signature computation") {
    for (const Dfa& d : random_languages(40, 300)) {
      std::set<std::vector<bool>> found;
      for (const Factorization& f : factorizations(d)) found.insert(as_bools(f.closed));
      CHECK(found == closed_sets_by_signatures(d));
    }
  }

  TEST_CASE("closed sets are maximal pairs") {
    for (const Dfa& d : random_languages(20, 400, 5)) {
      for (const Factorization& f : factorizations(d)) {
        Dfa x = x_recognizer(d, f);
        Dfa y = y_recognizer(d, f);
        CHECK(f.empty_x == is_empty(x));
        CHECK(f.empty_y == is_empty(y));
        for (State q = 0; q < d.state_count(); ++q) {
          CHECK(subset_of(y, with_start(d, q)) == f.closed.test(q));
        }
      }
    }
  }

  TEST_CASE("errors") {
    Dfa big = dfa_of("aaaaaaaaaaaaaaaa");
    CHECK(big.state_count() == 18);
    try {
      factorizations(big);
      FAIL("expected an exception");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kStateBlowup);
    }
    CHECK_THROWS_AS(factorizations(fig2_dfa(), 2), Error);
    CHECK_THROWS_AS(factorizations(determinize(fig1_nfa())), Error);
  }
}

TEST_SUITE("universal automaton") {
  TEST_CASE("universal language") {
    Nfa u = build_universal(sigma_star());
    CHECK(u.state_count() == 1);
    CHECK(u.transition_count() == 2);
    CHECK(u.is_initial(0));
    CHECK(u.is_final(0));
  }

  TEST_CASE("figure two accepts the language") {
    Nfa u = build_universal(fig2_dfa());
    CHECK(u.state_count() == 7);
    CHECK(equivalent(u, to_nfa(fig2_dfa())));
  }

  TEST_CASE("states recognize their factors") {
    for (const Dfa& d : random_languages(25, 500, 5)) {
      std::vector<Factorization> fs = factorizations(d);
      Nfa u = build_universal(d);
      CHECK(equivalent(u, to_nfa(d)));
      for (State i = 0; i < u.state_count(); ++i) {
        CHECK(equivalent(right_language(u, i), y_recognizer(d, fs[i])));
        Dfa x = x_recognizer(d, fs[i]);
        Dfa x_reversed = determinize(reverse(to_nfa(x)));
        CHECK(equivalent(left_language(u, i).dfa, x_reversed));
      }
    }
  }

  TEST_CASE("empty-prefix state of figure two breaks atomicity") {
    std::vector<Factorization> fs = factorizations(fig2_dfa());
    Nfa u = build_universal(fig2_dfa());
    AtomicityReport r = is_atomic(u);
    CHECK_FALSE(r.atomic);
    for (State i = 0; i < u.state_count(); ++i) {
      if (fs[i].empty_x) {
        CHECK_FALSE(r.per_state[i].is_union);
        CHECK(r.per_state[i].counterexample == std::optional<Word>(word("aa")));
        CHECK(u.state_name(i) == "P{}");
      } else {
        CHECK(r.per_state[i].is_union);
      }
    }
  }

  TEST_CASE("atomic exactly at the states with a non-empty prefix set") {
    for (const Dfa& d : random_languages(40, 600, 5)) {
      std::vector<Factorization> fs = factorizations(d);
      Nfa u = build_universal(d);
      AtomicityReport r = is_atomic(u);
      AtomSet s = compute_atoms(d);
      std::vector<std::size_t> all(s.size());
      std::iota(all.begin(), all.end(), 0);
      const bool atoms_cover_everything = equivalent(atom_union_recognizer(s, all), universal_dfa(ab()));
      for (State i = 0; i < u.state_count(); ++i) {
        if (fs[i].empty_x) {
          CHECK(r.per_state[i].is_union == atoms_cover_everything);
        } else {
          CHECK(r.per_state[i].is_union);
        }
      }
    }
  }
}
