#include "atomaton/dot.hpp"

#include <sstream>

namespace atomaton {
namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_dot(const Nfa& n, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << quoted(std::string(graph_name)) << " {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (State q = 0; q < n.state_count(); ++q) {
    out << "  s" << q << " [label=" << quoted(n.state_name(q));
    if (n.is_final(q)) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (State q = 0; q < n.state_count(); ++q) {
    if (!n.is_initial(q)) continue;
    out << "  init" << q << " [shape=point, style=invis];\n";
    out << "  init" << q << " -> s" << q << ";\n";
  }
  for (const auto& t : n.transitions()) {
    out << "  s" << t.from << " -> s" << t.to << " [label="
        << quoted(std::string(1, n.alphabet().symbol(t.symbol))) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace atomaton
