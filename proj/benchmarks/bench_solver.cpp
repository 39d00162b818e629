#include <benchmark/benchmark.h>

#include "acx/disc_solver.hpp"
#include "acx/model.hpp"
#include "acx/rng.hpp"

using namespace acx;

static AlmostComplexChart perturbed_chart(double eps) {
  Rng rng(41);
  PolyMatrix table(2, 2, 2);
  table.add_term(1, 0, {0, 0}, {1, 0}, Complex(-0.5, -0.2));
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      MultiIndex al(2, 0), be(2, 0);
      al[int(rng.next_u64() % 2)] += 1;
      be[int(rng.next_u64() % 2)] += 1;
      table.add_term(r, c, al, be, eps * rng.next_complex_normal());
    }
  return AlmostComplexChart(table, 2.0);
}

static void bm_solve_disc(benchmark::State& state) {
  auto chart = perturbed_chart(1e-2);
  HolomorphicDatum phi;
  phi.coeffs = {{Complex(0, 0), Complex(0.4, 0.1)}, {Complex(0.0, -0.3), Complex(0.1, 0.0)}};
  SolverOptions opts;
  opts.nr = int(state.range(0));
  opts.ntheta = opts.nr;
  opts.tolerance = 1e-7;
  for (auto _ : state) {
    DiscSolution sol = solve_disc(chart, phi, opts);
    benchmark::DoNotOptimize(sol.residual);
  }
  state.SetComplexityN(opts.nr * opts.nr);
}
BENCHMARK(bm_solve_disc)->RangeMultiplier(2)->Range(32, 128)->Complexity();

static void bm_disc_residual(benchmark::State& state) {
  auto chart = perturbed_chart(1e-2);
  DiscGrid z = DiscGrid::sample(int(state.range(0)), int(state.range(0)), 2, [](Complex zeta) {
    CVector v(2);
    v << 0.4 * zeta, Complex(0, -0.3) + 0.1 * zeta;
    return v;
  });
  for (auto _ : state) {
    benchmark::DoNotOptimize(disc_residual(chart, z));
  }
}
BENCHMARK(bm_disc_residual)->RangeMultiplier(2)->Range(32, 128);

BENCHMARK_MAIN();
