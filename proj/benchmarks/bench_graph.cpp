#include <benchmark/benchmark.h>

#include "indpath/graph.hpp"
#include "indpath/oracle.hpp"
#include "indpath/random.hpp"

using namespace indpath;

namespace {

void BM_SampleGnp(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const double p = 64.0 / static_cast<double>(n);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const Graph g = sample_gnp(n, p, seed++);
    benchmark::DoNotOptimize(g.edge_count());
  }
}

void BM_PruneMinDegree(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Graph g = sample_gnp(n, 64.0 / static_cast<double>(n), 7);
  for (auto _ : state) {
    const auto pruned = prune_min_degree(g, 16.0);
    benchmark::DoNotOptimize(pruned.graph.vertex_count());
  }
}

void BM_Excess(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Graph g = sample_gnp(n, 1.15 / static_cast<double>(n), 7);
  for (auto _ : state) benchmark::DoNotOptimize(excess(g));
}

void BM_ExactInducedPath(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Graph g = sample_gnp(n, 0.25, 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(exact_longest_induced_path(g).length);
}

}  // namespace

BENCHMARK(BM_SampleGnp)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PruneMinDegree)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Excess)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactInducedPath)->Arg(14)->Arg(20)->Unit(benchmark::kMillisecond);
