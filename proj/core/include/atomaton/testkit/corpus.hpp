#pragma once

#include <cstddef>
#include <filesystem>

#include "atomaton/testkit/generators.hpp"

namespace atomaton::testkit {

/// Writes `count` automata drawn with seeds p.seed, p.seed + 1, ... into
/// `dir`, plus a manifest.txt listing one instance per line as
/// "seed=S states=MIN-MAX alphabet=K density=D p_initial=I p_final=F path=FILE".
/// Returns the manifest path.
std::filesystem::path write_corpus(const std::filesystem::path& dir,
                                   const GenParams& p, std::size_t count);

}  // namespace atomaton::testkit
