#include <benchmark/benchmark.h>

#include "smw/coloring.hpp"
#include "smw/eds.hpp"
#include "smw/exact_width.hpp"
#include "smw/families.hpp"
#include "smw/hamiltonian.hpp"
#include "smw/maxcut.hpp"
#include "smw/pipeline.hpp"

using namespace smw;

namespace {

Graph distance_hereditary(int n) {
  return generate_family({FamilyKind::distance_hereditary, n, 1}, 11).graph;
}

Graph twin_cover(int n) { return generate_family({FamilyKind::twin_cover, n, 2}, 11).graph; }

RootedBranchDecomposition rooted(const Graph& g) {
  return root_decomposition(compute_sm_decomposition(g).bd);
}

void BM_PipelineDistanceHereditary(benchmark::State& state) {
  Graph g = distance_hereditary(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_sm_decomposition(g));
}
BENCHMARK(BM_PipelineDistanceHereditary)->Arg(16)->Arg(32)->Arg(64);

void BM_PipelineRandom(benchmark::State& state) {
  Rng rng(5);
  Graph g = random_connected_graph(static_cast<int>(state.range(0)), 0.35, rng);
  for (auto _ : state) benchmark::DoNotOptimize(compute_sm_decomposition(g));
}
BENCHMARK(BM_PipelineRandom)->Arg(7)->Arg(8);

void BM_ExactSmw(benchmark::State& state) {
  Rng rng(9);
  Graph g = random_connected_graph(static_cast<int>(state.range(0)), 0.4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(exact_smw(g));
}
BENCHMARK(BM_ExactSmw)->Arg(6)->Arg(8);

void BM_MaxCut(benchmark::State& state) {
  Graph g = twin_cover(static_cast<int>(state.range(0)));
  RootedBranchDecomposition rbd = rooted(g);
  for (auto _ : state) benchmark::DoNotOptimize(solve_maxcut(g, rbd));
}
BENCHMARK(BM_MaxCut)->Arg(12)->Arg(24);

void BM_Hamiltonian(benchmark::State& state) {
  Graph g = twin_cover(static_cast<int>(state.range(0)));
  RootedBranchDecomposition rbd = rooted(g);
  for (auto _ : state) benchmark::DoNotOptimize(solve_hamiltonian(g, rbd));
}
BENCHMARK(BM_Hamiltonian)->Arg(10)->Arg(14);

void BM_Chromatic(benchmark::State& state) {
  Graph g = distance_hereditary(static_cast<int>(state.range(0)));
  RootedBranchDecomposition rbd = rooted(g);
  for (auto _ : state) benchmark::DoNotOptimize(solve_chromatic(g, rbd));
}
BENCHMARK(BM_Chromatic)->Arg(10)->Arg(16);

void BM_Eds(benchmark::State& state) {
  Graph g = distance_hereditary(static_cast<int>(state.range(0)));
  RootedBranchDecomposition rbd = rooted(g);
  for (auto _ : state) benchmark::DoNotOptimize(solve_eds(g, rbd));
}
BENCHMARK(BM_Eds)->Arg(10)->Arg(16);

}  // namespace
BENCHMARK_MAIN();
