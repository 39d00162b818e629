#include <benchmark/benchmark.h>

#include "acx/cauchy.hpp"

using namespace acx;

static DiscGrid sample_field(int nr) {
  return DiscGrid::sample_scalar(nr, nr, [](Complex z) {
    return std::exp(z + 0.5 * std::conj(z));
  });
}

static void bm_cauchy_green_build(benchmark::State& state) {
  int nr = int(state.range(0));
  DiscGrid f = sample_field(nr);
  for (auto _ : state) {
    CauchyGreen t(f);
    benchmark::DoNotOptimize(t);
  }
  state.SetComplexityN(nr * nr);
}
BENCHMARK(bm_cauchy_green_build)->RangeMultiplier(2)->Range(32, 256)->Complexity();

static void bm_cauchy_green_on_grid(benchmark::State& state) {
  int nr = int(state.range(0));
  DiscGrid f = sample_field(nr);
  CauchyGreen t(f);
  for (auto _ : state) {
    DiscGrid out = t.on_grid();
    benchmark::DoNotOptimize(out);
  }
  state.SetComplexityN(nr * nr);
}
BENCHMARK(bm_cauchy_green_on_grid)->RangeMultiplier(2)->Range(32, 256)->Complexity();

static void bm_cauchy_green_point_eval(benchmark::State& state) {
  DiscGrid f = sample_field(int(state.range(0)));
  CauchyGreen t(f);
  Complex z(0.37, -0.21);
  for (auto _ : state) {
    benchmark::DoNotOptimize(t.eval_scalar(z));
  }
}
BENCHMARK(bm_cauchy_green_point_eval)->RangeMultiplier(2)->Range(32, 256);

static void bm_dbar_grid(benchmark::State& state) {
  int nr = int(state.range(0));
  DiscGrid f = sample_field(nr);
  for (auto _ : state) {
    DiscGrid d = dbar_grid(f);
    benchmark::DoNotOptimize(d);
  }
  state.SetComplexityN(nr * nr);
}
BENCHMARK(bm_dbar_grid)->RangeMultiplier(2)->Range(32, 256)->Complexity();

static void bm_cauchy_integral(benchmark::State& state) {
  BoundaryTrace trace = BoundaryTrace::sample_scalar(
      int(state.range(0)), [](Complex w) { return std::exp(w); });
  CauchyIntegral k(trace);
  Complex z(0.4, 0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(k.eval_scalar(z));
  }
}
BENCHMARK(bm_cauchy_integral)->RangeMultiplier(4)->Range(64, 4096);

BENCHMARK_MAIN();
