#include <benchmark/benchmark.h>

#include "fracsum/engine.hpp"
#include "fracsum/families.hpp"
#include "fracsum/identities.hpp"

namespace F = fracsum::families;

static void BM_RightSum(benchmark::State& state, fracsum::Summand f) {
  fracsum::EngineConfig cfg;
  cfg.n_levels = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fracsum::frac_sum_right(f, 1.0, -0.5, cfg));
  state.counters["n_max"] = double(cfg.n_start << (cfg.n_levels - 1));
}
BENCHMARK_CAPTURE(BM_RightSum, reciprocal, F::reciprocal())->DenseRange(6, 10, 2);
BENCHMARK_CAPTURE(BM_RightSum, nu_log_nu, F::nu_log_nu())->DenseRange(6, 10, 2);
BENCHMARK_CAPTURE(BM_RightSum, log_factorial, F::log_factorial())->Arg(8);

static void BM_Catalog(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(fracsum::run_catalog({}, {}, parallel));
}
BENCHMARK(BM_Catalog)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
