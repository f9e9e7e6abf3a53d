#include <benchmark/benchmark.h>

#include <vector>

#include "atomaton/atoms.hpp"
#include "atomaton/classifiers.hpp"
#include "atomaton/minimizers.hpp"
#include "atomaton/operations.hpp"
#include "atomaton/testkit/generators.hpp"

using namespace atomaton;

namespace {

std::vector<Nfa> corpus(std::size_t states, std::size_t count) {
  std::vector<Nfa> out;
  for (std::uint64_t seed = 1; out.size() < count; ++seed) {
    testkit::GenParams p;
    p.seed = seed;
    p.min_states = states;
    p.max_states = states;
    p.density = 2.0 / static_cast<double>(states);
    out.push_back(testkit::random_nfa(p));
  }
  return out;
}

std::vector<Dfa> minimal_corpus(std::size_t states, std::size_t count) {
  std::vector<Dfa> out;
  for (const Nfa& n : corpus(states, count)) out.push_back(minimize(determinize(n)));
  return out;
}

void BM_Determinize(benchmark::State& state) {
  auto input = corpus(static_cast<std::size_t>(state.range(0)), 32);
  for (auto _ : state) {
    for (const Nfa& n : input) benchmark::DoNotOptimize(determinize(n));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(input.size()));
}

void BM_MinimizeRefine(benchmark::State& state) {
  auto input = corpus(static_cast<std::size_t>(state.range(0)), 32);
  for (auto _ : state) {
    for (const Nfa& n : input) benchmark::DoNotOptimize(minimize(determinize(n)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(input.size()));
}

void BM_MinimizeBrzozowski(benchmark::State& state) {
  auto input = corpus(static_cast<std::size_t>(state.range(0)), 32);
  for (auto _ : state) {
    for (const Nfa& n : input) benchmark::DoNotOptimize(brzozowski_minimize(n));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(input.size()));
}

void BM_AtomatonDirect(benchmark::State& state) {
  auto input = minimal_corpus(static_cast<std::size_t>(state.range(0)), 32);
  for (auto _ : state) {
    for (const Dfa& d : input) benchmark::DoNotOptimize(atomaton_direct(d));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(input.size()));
}

void BM_AtomatonReverseRoute(benchmark::State& state) {
  auto input = corpus(static_cast<std::size_t>(state.range(0)), 32);
  for (auto _ : state) {
    for (const Nfa& n : input) benchmark::DoNotOptimize(atomaton_reverse_route(n));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(input.size()));
}

void BM_DeterminizationMinimality(benchmark::State& state) {
  auto input = corpus(static_cast<std::size_t>(state.range(0)), 32);
  for (Nfa& n : input) n = trim(n);
  for (auto _ : state) {
    for (const Nfa& n : input) benchmark::DoNotOptimize(check_determinization_minimality(n));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(input.size()));
}

void BM_Universal(benchmark::State& state) {
  auto input = minimal_corpus(static_cast<std::size_t>(state.range(0)), 8);
  std::erase_if(input, [](const Dfa& d) { return d.state_count() > 10; });
  for (auto _ : state) {
    for (const Dfa& d : input) benchmark::DoNotOptimize(build_universal(d));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(input.size()));
}

}  // namespace

BENCHMARK(BM_Determinize)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_MinimizeRefine)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_MinimizeBrzozowski)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_AtomatonDirect)->Arg(4)->Arg(8);
BENCHMARK(BM_AtomatonReverseRoute)->Arg(4)->Arg(8);
BENCHMARK(BM_DeterminizationMinimality)->Arg(4)->Arg(6);
BENCHMARK(BM_Universal)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
