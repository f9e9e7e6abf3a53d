#include "atomaton/text_format.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "atomaton/error.hpp"

namespace atomaton {
namespace {

enum class Section { kNone, kAlphabet, kStates, kInitial, kFinal, kTrans };

struct PendingTransition {
  std::string from;
  std::string symbol;
  std::string to;
  std::size_t line;
};

Section section_of(std::string_view token) {
  if (token == "alphabet:") return Section::kAlphabet;
  if (token == "states:") return Section::kStates;
  if (token == "initial:") return Section::kInitial;
  if (token == "final:") return Section::kFinal;
  if (token == "trans:") return Section::kTrans;
  return Section::kNone;
}

}  // namespace

Nfa parse_automaton(std::string_view text) {
  std::string symbols;
  std::vector<std::string> names;
  std::unordered_map<std::string, State> ids;
  std::vector<std::string> initial, final_tokens;
  std::vector<PendingTransition> transitions;
  bool saw_alphabet = false;

  auto intern = [&](const std::string& name) {
    auto [it, inserted] = ids.emplace(name, static_cast<State>(names.size()));
    if (inserted) names.push_back(name);
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  Section section = Section::kNone;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string t; tokens >> t;) words.push_back(t);
    if (words.empty()) continue;

    std::size_t first = 0;
    if (Section s = section_of(words[0]); s != Section::kNone) {
      section = s;
      if (s == Section::kAlphabet) saw_alphabet = true;
      first = 1;
    }
    if (first == words.size()) continue;

    switch (section) {
      case Section::kNone:
        throw Error(ErrorCode::kSyntaxError,
                    "line " + std::to_string(line_no) +
                        ": expected a section header, got '" + words[0] + "'",
                    line_no);
      case Section::kAlphabet:
        for (std::size_t i = first; i < words.size(); ++i) {
          if (words[i].size() != 1) {
            throw Error(ErrorCode::kSyntaxError,
                        "line " + std::to_string(line_no) +
                            ": alphabet symbols must be single characters",
                        line_no);
          }
          symbols += words[i];
        }
        break;
      case Section::kStates:
        for (std::size_t i = first; i < words.size(); ++i) intern(words[i]);
        break;
      case Section::kInitial:
        for (std::size_t i = first; i < words.size(); ++i) {
          intern(words[i]);
          initial.push_back(words[i]);
        }
        break;
      case Section::kFinal:
        for (std::size_t i = first; i < words.size(); ++i) {
          intern(words[i]);
          final_tokens.push_back(words[i]);
        }
        break;
      case Section::kTrans:
        if (words.size() - first != 3) {
          throw Error(ErrorCode::kSyntaxError,
                      "line " + std::to_string(line_no) +
                          ": a transition is 'from symbol to'",
                      line_no);
        }
        intern(words[first]);
        intern(words[first + 2]);
        transitions.push_back(
            {words[first], words[first + 1], words[first + 2], line_no});
        break;
    }
  }

  if (!saw_alphabet || symbols.empty()) {
    throw Error(ErrorCode::kSyntaxError, "missing or empty 'alphabet:' section");
  }
  if (names.empty()) {
    throw Error(ErrorCode::kSyntaxError, "automaton has no states");
  }
  Alphabet alphabet = [&] {
    try {
      return Alphabet(symbols);
    } catch (const Error& e) {
      throw Error(ErrorCode::kSyntaxError, e.what());
    }
  }();

  Nfa n(alphabet, names.size());
  for (State q = 0; q < names.size(); ++q) n.set_label(q, names[q]);
  for (const auto& name : initial) n.set_initial(ids.at(name));
  for (const auto& name : final_tokens) n.set_final(ids.at(name));
  for (const auto& t : transitions) {
    auto symbol = t.symbol.size() == 1 ? alphabet.find(t.symbol[0]) : std::nullopt;
    if (!symbol) {
      throw Error(ErrorCode::kUnknownSymbol,
                  "line " + std::to_string(t.line) + ": '" + t.symbol +
                      "' is not in the alphabet",
                  t.line);
    }
    n.add_transition(ids.at(t.from), *symbol, ids.at(t.to));
  }
  return n;
}

Nfa load_automaton(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_automaton(buffer.str());
}

std::string format_automaton(const Nfa& n) {
  std::ostringstream out;
  out << "alphabet:";
  for (char c : n.alphabet().symbols()) out << ' ' << c;
  out << "\nstates:";
  for (State q = 0; q < n.state_count(); ++q) out << ' ' << n.state_name(q);
  out << "\ninitial:";
  for (State q = 0; q < n.state_count(); ++q) {
    if (n.is_initial(q)) out << ' ' << n.state_name(q);
  }
  out << "\nfinal:";
  for (State q = 0; q < n.state_count(); ++q) {
    if (n.is_final(q)) out << ' ' << n.state_name(q);
  }
  out << "\ntrans:\n";
  for (const auto& t : n.transitions()) {
    out << n.state_name(t.from) << ' ' << n.alphabet().symbol(t.symbol) << ' '
        << n.state_name(t.to) << '\n';
  }
  return out.str();
}

}  // namespace atomaton
