#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "../fixtures.hpp"
#include "atomaton/isomorphism.hpp"
#include "atomaton/operations.hpp"
#include "atomaton/text_format.hpp"

using namespace atomaton;
using namespace fixtures;

namespace {

struct Run {
  int status;
  std::string out;
};

Run cli(const std::string& args) {
  std::string command = std::string(ATOMATON_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer{};
  for (std::size_t n; (n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0;) out.append(buffer.data(), n);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& name) { return "'" + data_file(name) + "'"; }

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("atoms report") {
  Run r = cli("atoms " + data("fig2.aut"));
  CHECK(r.status == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "A1 sig={q1} initial witness=a");
  CHECK(lines[4] == "A5 sig={q1,q2,q3} initial witness=aab");
  CHECK(lines[5] == "A6 sig={q2} final witness=%");
}

TEST_CASE("atomaton from a regex by the reverse route") {
  Run r = cli("atomaton --regex '(b|ba)*' --method reverse");
  CHECK(r.status == 0);
  Nfa n = parse_automaton(r.out);
  CHECK(n.state_count() == 2);
  CHECK(is_isomorphic(n, fig1_atm()));
  Run d = cli("atomaton --regex '(b|ba)*' --method direct");
  CHECK(is_isomorphic(parse_automaton(d.out), fig1_atm()));
}

TEST_CASE("atomaton of figure two") {
  Run r = cli("atomaton " + data("fig2.aut"));
  CHECK(r.status == 0);
  CHECK(is_isomorphic(parse_automaton(r.out), fig2_atm()));
}

TEST_CASE("equivalence exit codes") {
  CHECK(cli("equiv " + data("fig1a.aut") + " " + data("fig1c.aut")).status == 0);
  Run r = cli("equiv " + data("fig1a.aut") + " " + data("fig2.aut"));
  CHECK(r.status == 1);
  CHECK(r.out.rfind("different witness=", 0) == 0);
}

TEST_CASE("pipeline verbs") {
  Nfa det = parse_automaton(cli("determinize " + data("fig1a.aut")).out);
  CHECK(det.state_count() == 5);
  Nfa refine = parse_automaton(cli("minimize " + data("fig1a.aut")).out);
  Nfa brz = parse_automaton(cli("minimize --algo brzozowski " + data("fig1a.aut")).out);
  CHECK(is_isomorphic(refine, to_nfa(fig1_min())));
  CHECK(is_isomorphic(brz, to_nfa(fig1_min())));
  Nfa rev = parse_automaton(cli("reverse " + data("fig1c.aut")).out);
  CHECK(rev == reverse(load_automaton(data_file("fig1c.aut"))));
  CHECK(is_isomorphic(parse_automaton(cli("trim " + data("fig1c.aut")).out), to_nfa(to_idfa(fig1_min()))));
}

TEST_CASE("universal automaton") {
  Run r = cli("universal " + data("fig2.aut"));
  CHECK(r.status == 0);
  CHECK(r.out.find("# P{} has empty X") != std::string::npos);
  CHECK(parse_automaton(r.out).state_count() == 7);
}

TEST_CASE("check report") {
  Run r = cli("check --atomic --residual --bidet " + data("fig2_atomaton.aut"));
  CHECK(r.status == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 15);
  CHECK(lines[0] == "123 atomic atoms=A5");
  CHECK(lines[6] == "atomic: yes");
  CHECK(lines[7] == "123 not-residual");
  CHECK(lines[13] == "residual: no");
  CHECK(lines[14] == "bideterministic: no (not deterministic)");

  Run rev = cli("check " + data("fig1a.aut"));
  CHECK(rev.out.find("atomic: yes") != std::string::npos);
}

TEST_CASE("equations") {
  Run r = cli("equations " + data("fig1a.aut"));
  CHECK(r.out == "L1 = bL2\nL2 = aL1 | b(L2 | L3) | %\nL3 = aL1 | bL3 | %\ninitial: L1 L3\n");
}

TEST_CASE("dot output") {
  Run r = cli("dot " + data("fig1d.aut"));
  CHECK(r.status == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);
  CHECK(cli("trim --dot " + data("fig1d.aut")).out == r.out);
}

TEST_CASE("verification records") {
  Run r = cli("verify-theorem5 --count 5 --seed 1 --states 5");
  CHECK(r.status == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0].rfind("seed=1 states=", 0) == 0);
  for (const std::string& line : lines) {
    CHECK(line.find(" det_states=") != std::string::npos);
    CHECK(line.find(" min_states=") != std::string::npos);
    CHECK(line.find(" agree=1") != std::string::npos);
  }
}

TEST_CASE("random generation") {
  Run a = cli("random --seed 42 --min-states 3 --max-states 4 --density 0.25 --p-initial 0.4 --p-final 0.4");
  CHECK(a.status == 0);
  CHECK(a.out.rfind("alphabet: a b\nstates: 0 1 2 3\n", 0) == 0);
  CHECK(a.out == cli("random --seed 42 --min-states 3 --max-states 4 --density 0.25 --p-initial 0.4 --p-final 0.4").out);
}

TEST_CASE("output file") {
  auto path = std::filesystem::temp_directory_path() / "atomaton_cli_out.aut";
  std::filesystem::remove(path);
  Run r = cli("minimize " + data("fig2.aut") + " --out '" + path.string() + "'");
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(is_isomorphic(as_dfa(load_automaton(path)), fig2_dfa()));
  std::filesystem::remove(path);
}

TEST_CASE("deterministic output") {
  for (const char* verb : {"determinize", "atoms", "atomaton", "universal", "equations", "dot"}) {
    std::string args = std::string(verb) + " " + data("fig2.aut");
    CHECK(cli(args).out == cli(args).out);
  }
}

TEST_CASE("error exit codes") {
  CHECK(cli("minimize --regex '(ab'").status == 2);
  CHECK(cli("minimize --regex 'abc' --alphabet ab").status == 2);
  CHECK(cli("minimize").status == 2);
  CHECK(cli("minimize " + data("fig2.aut") + " --regex a").status == 2);
  CHECK(cli("minimize /nonexistent.aut").status == 2);
  CHECK(cli("frobnicate").status == 2);
  CHECK(cli("").status == 2);
  CHECK(cli("trim --regex '#'").status == 1);
  CHECK(cli("atoms --regex '#' --alphabet ab").status == 1);
  CHECK(cli("universal --regex 'aaaaaaaaaaaaaaaaa'").status == 1);
  CHECK(cli("--help").status == 0);
}
