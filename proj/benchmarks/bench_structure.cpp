#include <benchmark/benchmark.h>

#include "acx/levi.hpp"
#include "acx/model.hpp"
#include "acx/normalize.hpp"
#include "acx/rng.hpp"
#include "acx/transform.hpp"

using namespace acx;

static AlmostComplexChart quadratic_chart(int n) {
  Rng rng(7);
  PolyMatrix table(n, n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int deg = 0; deg <= 2; ++deg) {
        MultiIndex a(n, 0), b(n, 0);
        for (int q = 0; q < deg; ++q) {
          if (rng.next_double() < 0.5)
            a[int(rng.next_u64() % n)] += 1;
          else
            b[int(rng.next_u64() % n)] += 1;
        }
        table.add_term(r, c, a, b, 0.08 / n * rng.next_complex_normal());
      }
  return AlmostComplexChart(table, 1.0);
}

static void bm_j_matrix(benchmark::State& state) {
  int n = int(state.range(0));
  auto chart = quadratic_chart(n);
  Rng rng(5);
  CVector z = 0.4 * rng.next_unit_vector(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(j_matrix(chart, z));
  }
}
BENCHMARK(bm_j_matrix)->DenseRange(1, 4);

static void bm_levi_form(benchmark::State& state) {
  int n = int(state.range(0));
  auto chart = quadratic_chart(n);
  RealField u;
  u.eval = [](const CVector& z) { return z.squaredNorm(); };
  Rng rng(9);
  CVector p = 0.3 * rng.next_unit_vector(n);
  CVector v = rng.next_unit_vector(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(levi_form(chart, u, p, v));
  }
}
BENCHMARK(bm_levi_form)->DenseRange(2, 4);

static void bm_normalize_chart(benchmark::State& state) {
  int n = int(state.range(0));
  auto chart = quadratic_chart(n);
  for (auto _ : state) {
    auto res = normalize_chart(chart);
    benchmark::DoNotOptimize(res.a_at_zero);
  }
}
BENCHMARK(bm_normalize_chart)->DenseRange(2, 4);

static void bm_pushforward_eval(benchmark::State& state) {
  auto chart = quadratic_chart(2);
  PolyMap shear = PolyMap::identity(2);
  shear.add_term(0, {0, 1}, {1, 0}, Complex(0.05, 0.02));
  shear.add_term(1, {2, 0}, {0, 0}, Complex(0.07, 0.0));
  auto tf = ChartTransformation::from_poly(shear);
  auto pushed = pushforward(chart, tf);
  CVector w = tf.forward(0.2 * CVector::Ones(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pushed.a(w));
  }
}
BENCHMARK(bm_pushforward_eval);

BENCHMARK_MAIN();
