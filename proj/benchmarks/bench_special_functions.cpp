#include <benchmark/benchmark.h>

#include "fracsum/special_functions.hpp"

using fracsum::Complex;

static void BM_LogGamma(benchmark::State& state) {
  Complex z(0.3, 1.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fracsum::log_gamma(z));
    z += 1e-9;
  }
}
BENCHMARK(BM_LogGamma);

static void BM_Digamma(benchmark::State& state) {
  const Complex z(0.75, -2.0);
  for (auto _ : state) benchmark::DoNotOptimize(fracsum::digamma(z));
}
BENCHMARK(BM_Digamma);

// Arg selects the order: 0 for zeta itself, 1 and 2 for s-derivatives.
static void BM_HurwitzZeta(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const Complex s(-1.0), x(1.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(order == 0 ? fracsum::hurwitz_zeta(s, x)
                                        : fracsum::hurwitz_zeta_sderiv(order, s, x));
  }
}
BENCHMARK(BM_HurwitzZeta)->Arg(0)->Arg(1)->Arg(2);
