#include "atomaton/testkit/corpus.hpp"

#include <fstream>
#include <sstream>

#include "atomaton/error.hpp"
#include "atomaton/text_format.hpp"

namespace atomaton::testkit {

std::filesystem::path write_corpus(const std::filesystem::path& dir,
                                   const GenParams& p, std::size_t count) {
  validate(p);
  std::filesystem::create_directories(dir);
  const auto manifest_path = dir / "manifest.txt";
  std::ofstream manifest(manifest_path);
  if (!manifest) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write " + manifest_path.string());
  }
  for (std::size_t i = 0; i < count; ++i) {
    GenParams instance = p;
    instance.seed = p.seed + i;
    const std::string file = "nfa_" + std::to_string(instance.seed) + ".aut";
    std::ofstream out(dir / file);
    out << format_automaton(random_nfa(instance));

    std::ostringstream line;
    line << "seed=" << instance.seed << " states=" << p.min_states << '-'
         << p.max_states << " alphabet=" << p.alphabet_size
         << " density=" << p.density << " p_initial=" << p.p_initial
         << " p_final=" << p.p_final << " path=" << file << '\n';
    manifest << line.str();
  }
  return manifest_path;
}

}  // namespace atomaton::testkit
