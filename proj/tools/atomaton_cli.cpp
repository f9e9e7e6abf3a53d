#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atomaton/atoms.hpp"
#include "atomaton/classifiers.hpp"
#include "atomaton/dot.hpp"
#include "atomaton/equations.hpp"
#include "atomaton/error.hpp"
#include "atomaton/language.hpp"
#include "atomaton/minimizers.hpp"
#include "atomaton/operations.hpp"
#include "atomaton/regex.hpp"
#include "atomaton/testkit/corpus.hpp"
#include "atomaton/testkit/generators.hpp"
#include "atomaton/text_format.hpp"

namespace {

using namespace atomaton;

struct Input {
  std::string path;
  std::string regex;
  std::string alphabet;
};

struct Output {
  std::string path;
  bool dot = false;
};

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("input", in.path, "Automaton file");
  cmd->add_option("--regex", in.regex, "Regular expression instead of a file");
  cmd->add_option("--alphabet", in.alphabet,
                  "Alphabet for --regex (default: the symbols it uses)");
}

void add_output(CLI::App* cmd, Output& out) {
  cmd->add_option("--out,-o", out.path, "Write to this file instead of stdout");
  cmd->add_flag("--dot", out.dot, "Write automata in DOT format");
}

Nfa load(const Input& in) {
  const bool has_file = !in.path.empty();
  const bool has_regex = !in.regex.empty();
  if (has_file == has_regex) {
    throw Error(ErrorCode::kInvalidArgument,
                "give exactly one input: a file or --regex");
  }
  if (has_file) return load_automaton(in.path);
  Alphabet alphabet = in.alphabet.empty() ? alphabet_of(in.regex) : Alphabet(in.alphabet);
  return thompson_nfa(parse_regex(in.regex, alphabet), alphabet);
}

void emit(const Output& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out.path);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + out.path);
  file << text;
}

void emit_automaton(const Output& out, const Nfa& n, const std::string& header = {}) {
  emit(out, out.dot ? export_dot(n) : header + format_automaton(n));
}

std::string state_set_name(const Dfa& d, const StateSet& s) {
  std::string out = "{";
  bool first = true;
  for (State q = 0; q < d.state_count(); ++q) {
    if (!s.test(q)) continue;
    if (!first) out += ',';
    out += d.state_name(q);
    first = false;
  }
  return out + "}";
}

std::string atom_names(const std::vector<std::size_t>& atoms) {
  if (atoms.empty()) return "none";
  std::string out;
  for (std::size_t i : atoms) {
    if (!out.empty()) out += ',';
    out += 'A' + std::to_string(i + 1);
  }
  return out;
}

std::string atom_report(const AtomSet& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << 'A' << i + 1 << " sig=" << state_set_name(s.base, s.atoms[i]);
    if (s.is_initial(i)) out << " initial";
    if (i == s.final_index) out << " final";
    out << " witness=" << s.base.alphabet().format_word(atom_witness(s, i)) << '\n';
  }
  return out.str();
}

std::string atomicity_lines(const Nfa& n, const AtomicityReport& r) {
  std::ostringstream out;
  for (State q = 0; q < n.state_count(); ++q) {
    const StateAtomicity& e = r.per_state[q];
    out << n.state_name(q);
    if (e.is_union) {
      out << " atomic atoms=" << atom_names(e.atoms) << '\n';
    } else {
      out << " not-atomic counterexample="
          << n.alphabet().format_word(*e.counterexample) << '\n';
    }
  }
  out << "atomic: " << (r.atomic ? "yes" : "no") << '\n';
  return out.str();
}

std::string residual_lines(const Nfa& n, const ResidualReport& r) {
  std::ostringstream out;
  for (State q = 0; q < n.state_count(); ++q) {
    out << n.state_name(q);
    if (r.quotient_of[q]) {
      out << " residual quotient=" << r.base.state_name(*r.quotient_of[q]) << '\n';
    } else {
      out << " not-residual\n";
    }
  }
  out << "residual: " << (r.residual ? "yes" : "no") << '\n';
  return out.str();
}

std::string bidet_line(const Nfa& n) {
  std::optional<Idfa> i = as_idfa(n);
  if (!i) return "bideterministic: no (not deterministic)\n";
  std::optional<Idfa> trimmed = as_idfa(trim(n));
  if (!trimmed || trimmed->state_count() != n.state_count()) {
    throw Error(ErrorCode::kNotTrim, "bideterminism is defined for trim automata");
  }
  return std::string("bideterministic: ") + (is_bideterministic(*i) ? "yes" : "no") + '\n';
}

void verify_minimality(std::uint64_t seed, std::size_t count, std::size_t states,
                       const Output& out, int& status) {
  std::ostringstream text;
  for (std::size_t k = 0; k < count; ++k) {
    testkit::GenParams p;
    p.max_states = states;
    p.seed = seed + k;
    Nfa n = trim(testkit::random_nfa(p));
    MinimalityVerdict v = check_determinization_minimality(n);
    text << "seed=" << p.seed << " states=" << n.state_count()
         << " det_states=" << v.determinized.state_count()
         << " min_states=" << minimize(v.determinized).state_count()
         << " nd_minimal=" << v.nd_minimal << " nr_atomic=" << v.nr_atomic
         << " agree=" << v.agree << " agree_idfa=" << v.agree_idfa << '\n';
    if (!v.agree) status = 1;
  }
  emit(out, text.str());
  if (status != 0) std::cerr << "error: a verdict pair disagreed\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atoms, atomata and related constructions for regular languages"};
  app.require_subcommand(1);

  Input in;
  Output out;
  int status = 0;

  auto* det = app.add_subcommand("determinize", "Subset construction");
  auto* min = app.add_subcommand("minimize", "Minimal complete DFA");
  std::string algo = "refine";
  auto* rev = app.add_subcommand("reverse", "Reverse the automaton");
  auto* trm = app.add_subcommand("trim", "Keep useful states");
  auto* atm = app.add_subcommand("atoms", "Report the atoms of the language");
  auto* ato = app.add_subcommand("atomaton", "Build the atomaton");
  std::string method = "direct";
  auto* uni = app.add_subcommand("universal", "Build the universal automaton");
  auto* chk = app.add_subcommand("check", "Classify the automaton");
  bool atomic = false, residual = false, bidet = false, trim_first = false;
  auto* eqs = app.add_subcommand("equations", "Print the system of equations");
  auto* dot = app.add_subcommand("dot", "Print the automaton in DOT format");
  for (CLI::App* cmd : {det, min, rev, trm, atm, ato, uni, chk, eqs, dot}) {
    add_input(cmd, in);
    add_output(cmd, out);
  }
  min->add_option("--algo", algo, "refine or brzozowski")
      ->check(CLI::IsMember({"refine", "brzozowski"}));
  ato->add_option("--method", method, "direct or reverse")
      ->check(CLI::IsMember({"direct", "reverse"}));
  chk->add_flag("--atomic", atomic, "Atomicity per state");
  chk->add_flag("--residual", residual, "Residuality per state");
  chk->add_flag("--bidet", bidet, "Bideterminism");
  chk->add_flag("--trim-first", trim_first, "Trim before checking");

  auto* eqv = app.add_subcommand("equiv", "Exit 0 iff two automata are equivalent");
  std::string left, right;
  eqv->add_option("a", left, "First automaton file")->required();
  eqv->add_option("b", right, "Second automaton file")->required();

  auto* ver = app.add_subcommand("verify-theorem5",
                                 "Compare subset-automaton minimality with reverse atomicity");
  std::size_t count = 100, states = 6;
  std::uint64_t seed = 1;
  ver->add_option("--count", count, "Number of random automata");
  ver->add_option("--seed", seed, "First seed");
  ver->add_option("--states", states, "Maximum state count")->check(CLI::PositiveNumber);
  add_output(ver, out);

  auto* rnd = app.add_subcommand("random", "Generate a random NFA or corpus");
  testkit::GenParams params;
  std::string corpus;
  std::size_t corpus_count = 10;
  rnd->add_option("--seed", params.seed, "Seed");
  rnd->add_option("--min-states", params.min_states, "Minimum state count");
  rnd->add_option("--max-states", params.max_states, "Maximum state count");
  rnd->add_option("--alphabet-size", params.alphabet_size, "Number of symbols");
  rnd->add_option("--density", params.density, "Transition probability");
  rnd->add_option("--p-initial", params.p_initial, "Initial-state probability");
  rnd->add_option("--p-final", params.p_final, "Final-state probability");
  rnd->add_option("--corpus", corpus, "Write a corpus with manifest to this directory");
  rnd->add_option("--count", corpus_count, "Corpus size");
  add_output(rnd, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (det->parsed()) {
      emit_automaton(out, to_nfa(determinize(load(in))));
    } else if (min->parsed()) {
      Nfa n = load(in);
      emit_automaton(out, to_nfa(algo == "brzozowski" ? brzozowski_minimize(n)
                                                      : minimize(as_dfa(n))));
    } else if (rev->parsed()) {
      emit_automaton(out, reverse(load(in)));
    } else if (trm->parsed()) {
      emit_automaton(out, trim(load(in)));
    } else if (atm->parsed()) {
      emit(out, atom_report(compute_atoms(as_dfa(load(in)))));
    } else if (ato->parsed()) {
      Nfa n = load(in);
      Atomaton a = method == "reverse" ? atomaton_reverse_route(n)
                                       : atomaton_direct(as_dfa(n));
      emit_automaton(out, a.nfa);
    } else if (uni->parsed()) {
      Dfa d = minimize(as_dfa(load(in)));
      std::vector<Factorization> fs = factorizations(d);
      Nfa u = build_universal(d);
      std::string header;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].empty_x) header += "# " + u.state_name(i) + " has empty X\n";
        if (fs[i].empty_y) header += "# " + u.state_name(i) + " has empty Y\n";
      }
      emit_automaton(out, u, header);
    } else if (chk->parsed()) {
      Nfa n = load(in);
      if (trim_first) n = trim(n);
      if (!atomic && !residual && !bidet) atomic = true;
      std::string text;
      if (atomic) text += atomicity_lines(n, is_atomic(n));
      if (residual) text += residual_lines(n, is_residual(n));
      if (bidet) text += bidet_line(n);
      emit(out, text);
    } else if (eqs->parsed()) {
      Nfa n = load(in);
      std::optional<Idfa> i = as_idfa(n);
      bool complete = i.has_value();
      for (State q = 0; complete && q < n.state_count(); ++q) {
        for (Symbol a = 0; a < n.alphabet().size(); ++a) {
          if (n.successors(q, a).empty()) complete = false;
        }
      }
      emit(out, render(complete ? to_equations(as_dfa(n)) : to_equations(n)));
    } else if (dot->parsed()) {
      emit(out, export_dot(load(in)));
    } else if (eqv->parsed()) {
      Dfa a = as_dfa(load_automaton(left));
      Dfa b = as_dfa(load_automaton(right));
      std::optional<Word> w = distinguishing_word(a, b);
      if (w) {
        std::cout << "different witness=" << a.alphabet().format_word(*w) << '\n';
        status = 1;
      } else {
        std::cout << "equivalent\n";
      }
    } else if (ver->parsed()) {
      verify_minimality(seed, count, states, out, status);
    } else if (rnd->parsed()) {
      if (!corpus.empty()) {
        std::cout << testkit::write_corpus(corpus, params, corpus_count).string() << '\n';
      } else {
        emit_automaton(out, testkit::random_nfa(params));
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_input_error() ? 2 : 1;
  }
  return status;
}
