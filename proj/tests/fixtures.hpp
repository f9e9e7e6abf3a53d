#pragma once

#include <string>

#include "atomaton/automata.hpp"
#include "atomaton/operations.hpp"

namespace fixtures {

using namespace atomaton;

inline const Alphabet& ab() {
  static const Alphabet a("ab");
  return a;
}

constexpr Symbol A = 0;
constexpr Symbol B = 1;

inline Word word(const std::string& text) { return ab().parse_word(text); }

inline Nfa labeled(std::size_t n, std::initializer_list<const char*> names) {
  Nfa out(ab(), n);
  State q = 0;
  for (const char* name : names) out.set_label(q++, name);
  return out;
}

// States 1, 2, 3 as 0, 1, 2.
inline Nfa fig1_nfa() {
  Nfa n = labeled(3, {"1", "2", "3"});
  n.set_initial(0);
  n.set_initial(2);
  n.set_final(1);
  n.set_final(2);
  n.add_transition(0, B, 1);
  n.add_transition(1, A, 0);
  n.add_transition(1, B, 1);
  n.add_transition(1, B, 2);
  n.add_transition(2, A, 0);
  n.add_transition(2, B, 2);
  return n;
}

// P, R, E as 0, 1, 2.
inline Dfa fig1_min() {
  Dfa d(ab(), 3);
  d.set_label(0, "P");
  d.set_label(1, "R");
  d.set_label(2, "E");
  d.set_start(0);
  d.set_final(0);
  d.set_next(0, A, 1);
  d.set_next(0, B, 0);
  d.set_next(1, A, 2);
  d.set_next(1, B, 0);
  return d;
}

inline Nfa fig1_atm() {
  Nfa n = labeled(2, {"P", "R"});
  n.set_initial(0);
  n.set_final(0);
  n.add_transition(0, B, 0);
  n.add_transition(0, B, 1);
  n.add_transition(1, A, 0);
  return n;
}

// q1, q2, q3 as 0, 1, 2.
inline Dfa fig2_dfa() {
  Dfa d(ab(), 3);
  d.set_label(0, "q1");
  d.set_label(1, "q2");
  d.set_label(2, "q3");
  d.set_start(0);
  d.set_final(1);
  d.set_next(0, A, 1);
  d.set_next(0, B, 0);
  d.set_next(1, A, 2);
  d.set_next(1, B, 0);
  d.set_next(2, A, 2);
  d.set_next(2, B, 1);
  return d;
}

// 123, -123, 12-3, -1-23, 1-2-3, -12-3 as 0..5.
inline Nfa fig2_atm() {
  Nfa n = labeled(6, {"123", "-123", "12-3", "-1-23", "1-2-3", "-12-3"});
  n.set_initial(0);
  n.set_initial(2);
  n.set_initial(4);
  n.set_final(5);
  n.add_transition(0, A, 0);
  n.add_transition(0, A, 1);
  n.add_transition(0, B, 0);
  n.add_transition(0, B, 2);
  n.add_transition(1, A, 3);
  n.add_transition(2, B, 4);
  n.add_transition(3, B, 1);
  n.add_transition(3, B, 5);
  n.add_transition(4, A, 2);
  n.add_transition(4, A, 5);
  return n;
}

inline Dfa sigma_star(const Alphabet& alphabet = ab()) {
  Dfa d(alphabet, 1);
  d.set_final(0);
  return d;
}

inline std::string data_file(const std::string& name) {
  return std::string(ATOMATON_DATA_DIR) + "/" + name;
}

/// Signature from 0-based state indices.
inline StateSet sig(std::size_t width, std::initializer_list<std::size_t> states) {
  StateSet s(width);
  for (std::size_t q : states) s.set(q);
  return s;
}

}  // namespace fixtures
