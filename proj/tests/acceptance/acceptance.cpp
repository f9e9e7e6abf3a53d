#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../fixtures.hpp"
#include "atomaton/atoms.hpp"
#include "atomaton/classifiers.hpp"
#include "atomaton/error.hpp"
#include "atomaton/isomorphism.hpp"
#include "atomaton/language.hpp"
#include "atomaton/minimizers.hpp"
#include "atomaton/operations.hpp"
#include "atomaton/regex.hpp"
#include "atomaton/testkit/generators.hpp"
#include "atomaton/testkit/oracles.hpp"

using namespace atomaton;
using namespace fixtures;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) notes.push_back("first failure: " + what);
    pass = false;
  }
};

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

std::string word_text(const Word& w) {
  return w.empty() ? "%" : ab().format_word(w);
}

/// Random non-empty languages given by regexes whose quotient DFA has at
/// most max_states states, with the regex text kept for diagnostics.
struct Sample {
  std::string text;
  Regex regex;
  Dfa dfa;
};

std::vector<Sample> regex_samples(std::size_t count, std::size_t max_states,
                                  std::uint64_t first_seed) {
  std::vector<Sample> out;
  for (std::uint64_t seed = first_seed; out.size() < count; ++seed) {
    testkit::GenParams p;
    p.seed = seed;
    p.regex_depth = 5;
    Regex r = testkit::random_regex(p);
    Dfa d = quotient_dfa(r, ab());
    if (d.state_count() > max_states || is_empty(d)) continue;
    out.push_back({to_string(r, ab()), r, std::move(d)});
  }
  return out;
}

std::vector<Sample> curated_and_random(std::size_t count, std::size_t max_states) {
  std::vector<Sample> out;
  for (const char* text : {"(b|ba)*", "(b|ab)*", "(b*a(a+b)*b)*b*a(a+b)*", "(ab)*", "a*", "a", "aa"}) {
    Regex r = parse_regex(text, ab());
    out.push_back({text, r, quotient_dfa(r, ab())});
  }
  for (Sample& s : regex_samples(count, max_states, 1)) out.push_back(std::move(s));
  return out;
}

void figure_one(Outcome& o) {
  Dfa det = determinize(fig1_nfa());
  o.require(det.state_count() == 5, "determinized state count");
  std::set<StateSet> labels(det.subset_labels().begin(), det.subset_labels().end());
  std::set<StateSet> expected{sig(3, {0, 2}), sig(3, {0}), sig(3, {1, 2}), sig(3, {1}), sig(3, {})};
  o.require(labels == expected, "subset labels {1,3},{1},{2,3},{2},{}");
  Dfa min = minimize(det);
  o.require(min.state_count() == 3 && is_isomorphic(min, fig1_min()), "minimal DFA");
  Nfa atm = trim(reverse(to_nfa(fig1_min())));
  o.require(atm.state_count() == 2 && is_isomorphic(atm, fig1_atm()), "trimmed reverse");
  o.detail << "det=" << det.state_count() << " min=" << min.state_count()
           << " atomaton=" << atm.state_count();
}

void figure_two(Outcome& o) {
  AtomSet s = compute_atoms(fig2_dfa());
  std::set<StateSet> found(s.atoms.begin(), s.atoms.end());
  std::set<StateSet> expected{sig(3, {0}), sig(3, {0, 1}), sig(3, {2}),
                              sig(3, {1, 2}), sig(3, {0, 1, 2}), sig(3, {1})};
  o.require(s.size() == 6 && found == expected, "atom signatures");
  o.require(s.atoms[s.final_index] == sig(3, {1}), "final atom");
  Nfa a = atomaton_direct(fig2_dfa()).nfa;
  o.require(is_isomorphic(a, fig2_atm()), "isomorphic to the reference atomaton");
  o.require(a.state_count() == 6, "six states");
  o.require(a.transition_count() == 10, "ten transitions");
  o.require(a.initial_states().count() == 3, "three initial states");
  o.require(a.final_states().count() == 1, "one final state");
  o.detail << "atoms=" << s.size() << " states=" << a.state_count()
           << " transitions=" << a.transition_count()
           << " initial=" << a.initial_states().count() << " final=" << a.final_states().count();
}

void route_equivalence(Outcome& o) {
  std::size_t compared = 0;
  auto compare = [&](const Dfa& d, const Nfa& n, const std::string& what) {
    ++compared;
    Nfa direct = atomaton_direct(d).nfa;
    o.require(is_isomorphic(direct, atomaton_reverse_route(n).nfa), what);
  };
  compare(fig1_min(), fig1_nfa(), "figure one");
  compare(fig2_dfa(), to_nfa(fig2_dfa()), "figure two");
  std::size_t regexes = 0, largest = 0;
  for (const Sample& s : regex_samples(200, 10, 1)) {
    compare(s.dfa, to_nfa(s.dfa), s.text);
    compare(s.dfa, thompson_nfa(s.regex, ab()), s.text + " (thompson)");
    ++regexes;
    largest = std::max(largest, s.dfa.state_count());
  }
  o.detail << "regexes=" << regexes << " comparisons=" << compared
           << " largest_quotient_dfa=" << largest;
}

void determinization_minimality(Outcome& o) {
  std::size_t agree = 0, agree_idfa = 0, minimal = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    testkit::GenParams p;
    p.seed = seed;
    p.max_states = 6;
    p.alphabet_size = 2;
    Nfa n = trim(testkit::random_nfa(p));
    MinimalityVerdict v = check_determinization_minimality(n);
    o.require(v.agree, "seed " + std::to_string(seed));
    if (v.agree) ++agree;
    if (v.agree_idfa) ++agree_idfa;
    if (v.nd_minimal) ++minimal;
  }
  o.detail << "instances=1000 agree=" << agree << " agree_idfa_reading=" << agree_idfa
           << " minimal=" << minimal;
}

void atomicity_suite(Outcome& o) {
  std::size_t languages = 0, universal_failures = 0, explained = 0, trimmed_ok = 0;
  std::string example;
  for (const Sample& s : regex_samples(200, 8, 5000)) {
    ++languages;
    Dfa d = minimize(s.dfa);
    o.require(is_atomic(to_nfa(d)).atomic, s.text + " quotient DFA");
    o.require(is_atomic(atomaton_direct(d).nfa).atomic, s.text + " atomaton");
    o.require(is_atomic(testkit::random_residual_nfa(d, languages)).atomic, s.text + " residual NFA");
    Nfa u = build_universal(d);
    AtomicityReport r = is_atomic(u);
    o.require(r.atomic, s.text + " universal automaton");
    if (r.atomic) continue;
    ++universal_failures;
    std::vector<Factorization> fs = factorizations(d);
    bool only_empty_x = true;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (!r.per_state[i].is_union && !fs[i].empty_x) only_empty_x = false;
    }
    std::vector<std::size_t> all(r.atom_set.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    bool uncovered = !is_empty(complement(atom_union_recognizer(r.atom_set, all)));
    if (only_empty_x && uncovered) ++explained;
    if (is_atomic(trim(u)).atomic) ++trimmed_ok;
    if (example.empty()) {
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (r.per_state[i].counterexample) {
          example = s.text + " state " + u.state_name(static_cast<State>(i)) + " word " +
                    word_text(*r.per_state[i].counterexample);
          break;
        }
      }
    }
  }
  o.detail << "languages=" << languages << " universal_non_atomic=" << universal_failures;
  if (universal_failures > 0) {
    o.notes.push_back("every non-atomic universal state is the factorization with empty X, whose "
                      "right language is the full word set; this holds in " +
                      std::to_string(explained) + " of " + std::to_string(universal_failures) +
                      " failing languages");
    o.notes.push_back("trim universal automaton atomic in " + std::to_string(trimmed_ok) + " of " +
                      std::to_string(universal_failures) + " failing languages");
    o.notes.push_back("example: " + example);
  }
}

void atom_algebra(Outcome& o) {
  std::size_t languages = 0, atoms = 0;
  for (const Sample& s : curated_and_random(200, 10)) {
    ++languages;
    Dfa d = minimize(s.dfa);
    AtomSet set = compute_atoms(d);
    atoms += set.size();
    const std::size_t n = d.state_count();
    std::vector<Dfa> rec;
    for (std::size_t i = 0; i < set.size(); ++i) rec.push_back(atom_recognizer(set, i));
    for (std::size_t i = 0; i < rec.size(); ++i) {
      o.require(!is_empty(rec[i]), s.text + " empty atom");
      for (std::size_t j = i + 1; j < rec.size(); ++j) {
        o.require(is_empty(product(rec[i], rec[j], ProductMode::kAnd)), s.text + " disjointness");
      }
    }
    for (State q = 0; q < n; ++q) {
      std::vector<std::size_t> parts;
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (set.atoms[i].test(q)) parts.push_back(i);
      }
      o.require(parts == quotient_as_atoms(set, q), s.text + " reported quotient atoms");
      o.require(equivalent(right_language(to_nfa(d), q), atom_union_recognizer(set, parts)),
                s.text + " quotient as union");
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (Symbol a = 0; a < ab().size(); ++a) {
        Dfa quotient = with_start(rec[i], rec[i].next(rec[i].start(), a));
        std::vector<std::size_t> reported = atom_quotient(set, i, Word{a});
        o.require(equivalent(quotient, atom_union_recognizer(set, reported)),
                  s.text + " atom quotient");
      }
    }
    o.require(set.size() <= (std::size_t{1} << n) - 1, s.text + " atom bound");
    Idfa reverse_min = to_idfa(minimize(determinize(reverse(to_nfa(d)))));
    o.require(set.size() == reverse_min.state_count(), s.text + " atom count");
  }
  o.detail << "languages=" << languages << " atoms=" << atoms;
}

void oracle_agreement(Outcome& o) {
  std::size_t tested = 0;
  auto check = [&](const Dfa& d, const std::string& what) {
    ++tested;
    AtomSet s = compute_atoms(d);
    std::vector<StateSet> found =
        testkit::oracle_atoms(s.base, 2 * s.reverse_subset.state_count());
    std::set<StateSet> expected(s.atoms.begin(), s.atoms.end());
    o.require(std::set<StateSet>(found.begin(), found.end()) == expected, what);
  };
  check(fig1_min(), "figure one");
  check(fig2_dfa(), "figure two");
  std::size_t random = 0;
  for (std::uint64_t seed = 1; random < 200; ++seed) {
    testkit::GenParams p;
    p.seed = seed;
    p.max_states = 6;
    Dfa d = minimize(testkit::random_dfa(p));
    if (d.final_states().none()) continue;
    ++random;
    check(d, "seed " + std::to_string(seed));
  }
  o.detail << "automata=" << tested;
}

void minimizer_agreement(Outcome& o) {
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    testkit::GenParams p;
    p.seed = seed;
    p.max_states = 6;
    Nfa n = testkit::random_nfa(p);
    Dfa b = brzozowski_minimize(n);
    Dfa m = minimize(determinize(n));
    o.require(is_isomorphic(b, m), "seed " + std::to_string(seed));
    o.require(is_minimal(b) && is_minimal(m), "minimality verdict, seed " + std::to_string(seed));
  }
  o.detail << "automata=500";
}

void reversed_atomaton(Outcome& o) {
  std::size_t languages = 0;
  for (const Sample& s : curated_and_random(200, 10)) {
    ++languages;
    Dfa d = minimize(s.dfa);
    Nfa a = atomaton_direct(d).nfa;
    std::optional<Idfa> r = as_idfa(reverse(a));
    o.require(r.has_value(), s.text + " reverse deterministic");
    if (r) o.require(is_isomorphic(to_nfa(minimize_idfa(*r)), to_nfa(*r)), s.text + " reverse minimal");
    o.require(is_isomorphic(determinize(a), d), s.text + " determinized atomaton");
  }
  o.detail << "languages=" << languages;
}

void bideterministic(Outcome& o) {
  std::size_t total = 0, positive = 0;
  auto check = [&](const Regex& r, const std::string& what) {
    ++total;
    BideterminismCheck c = check_bideterministic_characterization(r, ab());
    o.require(c.atomaton_is_quotient_idfa == c.language_bideterministic, what);
    if (c.language_bideterministic) ++positive;
  };
  for (const char* text : {"(ab)*", "a*", "(b|ba)*", "(b|ab)*", "ab", "(aa|b)*", "a(ba)*"}) {
    check(parse_regex(text, ab()), text);
  }
  for (const Sample& s : regex_samples(60, 10, 9000)) check(s.regex, s.text);
  o.detail << "languages=" << total << " bideterministic=" << positive;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria{
      {1, "figure one pipeline", 1.0, figure_one},
      {2, "figure two atomaton", 1.0, figure_two},
      {3, "route equivalence", 60.0, route_equivalence},
      {4, "determinization minimal iff reverse atomic", 120.0, determinization_minimality},
      {5, "atomic automata of a language", 0.0, atomicity_suite},
      {6, "atom algebra", 0.0, atom_algebra},
      {7, "oracle agreement", 0.0, oracle_agreement},
      {8, "minimizer agreement", 0.0, minimizer_agreement},
      {9, "reversed atomaton properties", 0.0, reversed_atomaton},
      {10, "bideterministic characterization", 0.0, bideterministic},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.count(c.number)) continue;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.pass = false;
      o.notes.push_back("time limit " + std::to_string(c.limit_seconds) + " s exceeded");
    }
    std::printf("criterion %d %s: %s %s (%.3f s)\n", c.number, c.title, o.pass ? "PASS" : "FAIL",
                o.detail.str().c_str(), seconds);
    for (const std::string& note : o.notes) std::printf("  %s\n", note.c_str());
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
