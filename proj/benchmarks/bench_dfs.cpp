#include <benchmark/benchmark.h>

#include "indpath/dfs.hpp"
#include "indpath/experiments.hpp"
#include "indpath/query_source.hpp"

using namespace indpath;

namespace {

// Full generative exploration of G(n, (1+eps)/n), the workload the engine
// is tuned for. The ledger is off, so this exercises the bulk path.
void BM_SupercriticalRun(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const double p = 1.15 / static_cast<double>(n);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto src = QuerySource::generative(n, p, seed++, LedgerMode::off);
    const auto rec = dfs_run(src, VertexOrdering::identity(n));
    benchmark::DoNotOptimize(rec.max_u);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(n));
}

// Same exploration through the per-pair ledger, for comparison.
void BM_SupercriticalRunLedger(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const double p = 1.15 / static_cast<double>(n);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto src = QuerySource::generative(n, p, seed++, LedgerMode::on);
    const auto rec = dfs_run(src, VertexOrdering::identity(n));
    benchmark::DoNotOptimize(rec.max_u);
  }
}

void BM_Ramsey2Pipeline(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Ramsey2Config cfg;
  cfg.n = n;
  cfg.scale = 50.0 / (7e-7 * static_cast<double>(n));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const auto t = ramsey2_trial(cfg, seed++);
    benchmark::DoNotOptimize(t.pipeline.path_length);
  }
}

}  // namespace

BENCHMARK(BM_SupercriticalRun)->Arg(10000)->Arg(100000)->Arg(1000000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SupercriticalRunLedger)->Arg(1000)->Arg(4000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Ramsey2Pipeline)->Arg(100000)->Unit(benchmark::kMillisecond);
