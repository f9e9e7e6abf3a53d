#include "atomaton/equations.hpp"

#include <sstream>

#include "atomaton/error.hpp"
#include "atomaton/operations.hpp"

namespace atomaton {

EquationSystem to_equations(const Nfa& n) {
  EquationSystem e{n.alphabet(), {}, {}, {}, {}, false};
  for (State q = 0; q < n.state_count(); ++q) {
    e.names.push_back(n.state_name(q));
    auto& per_symbol = e.successors.emplace_back();
    for (Symbol a = 0; a < n.alphabet().size(); ++a) {
      auto targets = n.successors(q, a);
      per_symbol.emplace_back(targets.begin(), targets.end());
    }
    e.epsilon.push_back(n.is_final(q));
    if (n.is_initial(q)) e.initial.push_back(q);
  }
  return e;
}

EquationSystem to_equations(const Dfa& d) {
  EquationSystem e = to_equations(to_nfa(d));
  e.deterministic = true;
  return e;
}

Nfa from_equations(const EquationSystem& e) {
  const std::size_t count = e.names.size();
  if (e.successors.size() != count || e.epsilon.size() != count) {
    throw Error(ErrorCode::kInvalidArgument, "ragged equation system");
  }
  Nfa n(e.alphabet, count);
  for (State q = 0; q < count; ++q) {
    n.set_label(q, e.names[q]);
    if (e.successors[q].size() != e.alphabet.size()) {
      throw Error(ErrorCode::kInvalidArgument, "ragged equation system");
    }
    for (Symbol a = 0; a < e.alphabet.size(); ++a) {
      for (State r : e.successors[q][a]) n.add_transition(q, a, r);
    }
    n.set_final(q, e.epsilon[q]);
  }
  for (State q : e.initial) n.set_initial(q);
  return n;
}

std::string render(const EquationSystem& e) {
  std::ostringstream out;
  auto var = [&](State q) { return "L" + e.names[q]; };
  for (State q = 0; q < e.names.size(); ++q) {
    std::vector<std::string> terms;
    for (Symbol a = 0; a < e.alphabet.size(); ++a) {
      const auto& targets = e.successors[q][a];
      if (targets.empty()) continue;
      std::string term(1, e.alphabet.symbol(a));
      if (targets.size() == 1) {
        term += var(targets.front());
      } else {
        term += '(';
        for (std::size_t i = 0; i < targets.size(); ++i) {
          if (i > 0) term += " | ";
          term += var(targets[i]);
        }
        term += ')';
      }
      terms.push_back(std::move(term));
    }
    if (e.epsilon[q]) terms.emplace_back("%");
    out << var(q) << " = ";
    if (terms.empty()) {
      out << '#';
    } else {
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) out << " | ";
        out << terms[i];
      }
    }
    out << '\n';
  }
  out << "initial:";
  for (State q : e.initial) out << ' ' << var(q);
  out << '\n';
  return out.str();
}

}  // namespace atomaton
