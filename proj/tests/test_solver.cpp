#include <doctest.h>

#include "acx/disc_solver.hpp"
#include "acx/errors.hpp"
#include "acx/levi.hpp"
#include "acx/model.hpp"
#include "acx/model_discs.hpp"
#include "acx/rng.hpp"
#include "acx/transform.hpp"

using namespace acx;

static ModelStructure simple_model(Complex a) {
  ModelStructure m;
  m.n = 2;
  m.mu = CMatrix::Zero(1, 1);
  m.mu(0, 0) = a;
  return m;
}

static AlmostComplexChart perturbed_model(Complex a, double eps, uint64_t seed) {
  Rng rng(seed);
  PolyMatrix table(2, 2, 2);
  table.add_term(1, 0, {0, 0}, {1, 0}, -a);  // the model part
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      MultiIndex al(2, 0), be(2, 0);
      al[int(rng.next_u64() % 2)] += 1;
      be[int(rng.next_u64() % 2)] += 1;
      table.add_term(r, c, al, be, eps * rng.next_complex_normal());
    }
  return AlmostComplexChart(table, 2.0);
}

TEST_CASE("integrable case: solver is the identity on holomorphic data") {
  auto chart = AlmostComplexChart::standard(2, 2.0);
  HolomorphicDatum phi;
  phi.coeffs = {{Complex(0, 0), Complex(1, 0)}, {Complex(0.2, -0.3)}};  // (zeta, const)
  SolverOptions opts;
  opts.nr = 32;
  opts.ntheta = 32;
  DiscSolution sol = solve_disc(chart, phi, opts);
  CHECK(sol.iterations == 1);
  double worst = 0.0;
  for (int j = 0; j < sol.grid.nr(); ++j)
    for (int k = 0; k < sol.grid.ntheta(); ++k)
      worst = std::max(worst,
                       (sol.grid.value_vector(j, k) - phi.eval(sol.grid.node(j, k))).norm());
  CHECK(worst == 0.0);  // bitwise: the first iterate is phi itself
  CHECK(sol.residual < 1e-13);
}

TEST_CASE("solver reproduces the closed-form model family disc") {
  Complex a(0.6, -0.3);
  ModelStructure m = simple_model(a);
  auto chart = model_chart(m, 1.3);

  CVector v(1);
  v[0] = Complex(0.8, 0.6);
  v.normalize();
  Complex anchor(0.05, -0.35);
  FamilyDisc family = model_disc_family(m, v, anchor, 1.0);

  // Datum = the holomorphic part of the ansatz: ('v zeta, anchor + conj(c) zeta^2).
  HolomorphicDatum phi;
  phi.coeffs = {{Complex(0, 0), v[0]},
                {family.params.anchor, Complex(0, 0), std::conj(family.params.c)}};
  SolverOptions opts;
  opts.nr = 64;
  opts.ntheta = 64;
  opts.tolerance = 1e-12;
  DiscSolution sol = solve_disc(chart, phi, opts);

  double worst = 0.0;
  for (int j = 0; j < sol.grid.nr(); ++j)
    for (int k = 0; k < sol.grid.ntheta(); ++k)
      worst = std::max(
          worst, (sol.grid.value_vector(j, k) - family.eval(sol.grid.node(j, k))).norm());
  CHECK(worst < 1e-6);
  CHECK(sol.residual < 1e-12);

  // the evaluator agrees off nodes too
  Complex probe(0.31, -0.12);
  CHECK((sol.eval(probe) - family.eval(probe)).norm() < 1e-6);
}

TEST_CASE("perturbed model charts converge with geometric residual decay") {
  auto chart = perturbed_model(Complex(0.5, 0.2), 1e-2, 3);
  HolomorphicDatum phi;
  phi.coeffs = {{Complex(0, 0), Complex(0.4, 0.1)}, {Complex(0.0, -0.3), Complex(0.1, 0.0)}};
  SolverOptions opts;
  opts.nr = 256;
  opts.ntheta = 256;
  opts.tolerance = 1e-8;
  DiscSolution sol = solve_disc(chart, phi, opts);
  CHECK(sol.iterations <= 30);
  CHECK(sol.residual < 1e-8);
  // geometric decay while above the discretization floor
  for (size_t i = 1; i + 1 < sol.residual_history.size(); ++i) {
    if (sol.residual_history[i] < 5.0 * sol.residual) break;
    CHECK(sol.residual_history[i] < 0.9 * sol.residual_history[i - 1]);
  }
}

TEST_CASE("solution depends continuously on the datum") {
  auto chart = perturbed_model(Complex(0.4, 0.0), 5e-2, 9);
  HolomorphicDatum phi1, phi2;
  phi1.coeffs = {{Complex(0, 0), Complex(0.3, 0.0)}, {Complex(0, -0.25)}};
  phi2 = phi1;
  phi2.coeffs[0][1] += 1e-6;
  SolverOptions opts;
  opts.nr = 64;
  opts.ntheta = 64;
  opts.tolerance = 1e-6;
  DiscSolution s1 = solve_disc(chart, phi1, opts);
  DiscSolution s2 = solve_disc(chart, phi2, opts);
  double diff = (s1.grid.values() - s2.grid.values()).cwiseAbs().maxCoeff();
  CHECK(diff < 5e-6);
  CHECK(diff > 1e-8);  // it does move
}

TEST_CASE("disc_residual examples") {
  SUBCASE("holomorphic polynomial under the standard structure") {
    auto chart = AlmostComplexChart::standard(2, 3.0);
    DiscGrid z = DiscGrid::sample(32, 32, 2, [](Complex zeta) {
      CVector v(2);
      v << zeta * zeta, zeta;
      return v;
    });
    CHECK(disc_residual(chart, z) < 1e-12);
  }
  SUBCASE("anti-holomorphic disc has residual about 1") {
    auto chart = AlmostComplexChart::standard(2, 3.0);
    DiscGrid z = DiscGrid::sample(32, 32, 2, [](Complex zeta) {
      CVector v(2);
      v << std::conj(zeta), Complex(0, 0);
      return v;
    });
    CHECK(disc_residual(chart, z) == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("family disc is an exact solution") {
    ModelStructure m = simple_model(Complex(0.7, 0.4));
    auto chart = model_chart(m, 1.2);
    CVector v(1);
    v[0] = 1.0;
    FamilyDisc fam = model_disc_family(m, v, Complex(0.0, -0.35), 1.0);
    CHECK(disc_residual(chart, fam.eval, fam.params.radius) < 1e-10);
  }
  SUBCASE("points outside the chart are rejected") {
    auto chart = AlmostComplexChart::standard(2, 0.1);
    DiscGrid z = DiscGrid::sample(16, 16, 2, [](Complex zeta) {
      CVector v(2);
      v << 5.0 * zeta, Complex(0, 0);
      return v;
    });
    CHECK_THROWS_AS(disc_residual(chart, z), IterateLeftChart);
  }
}

TEST_CASE("contraction observability: small A means ratio < 0.9 throughout") {
  auto chart = perturbed_model(Complex(0.05, 0.02), 5e-3, 17);  // sup|A| well under 0.1
  HolomorphicDatum phi;
  phi.coeffs = {{Complex(0, 0), Complex(0.5, 0.0)}, {Complex(0, -0.4), Complex(0.2, 0.1)}};
  SolverOptions opts;
  opts.nr = 64;
  opts.ntheta = 64;
  opts.tolerance = 5e-7;
  DiscSolution sol = solve_disc(chart, phi, opts);
  for (size_t i = 1; i < sol.residual_history.size(); ++i) {
    if (sol.residual_history[i] < 5.0 * sol.residual) break;
    CHECK(sol.residual_history[i] / sol.residual_history[i - 1] < 0.9);
  }
}

TEST_CASE("pushforward equivariance: transformed discs solve the transformed chart") {
  Complex a(0.5, -0.2);
  auto chart = model_chart(simple_model(a), 1.5);
  CVector v(1);
  v[0] = Complex(0, 1);
  FamilyDisc fam = model_disc_family(simple_model(a), v, Complex(-0.1, -0.35), 1.0);

  PolyMap shear = PolyMap::identity(2);
  shear.add_term(0, {0, 1}, {0, 0}, Complex(0.12, 0.05));
  shear.add_term(1, {0, 0}, {1, 0}, Complex(0.00, 0.08));
  auto tf = ChartTransformation::from_poly(shear);
  auto pushed = pushforward(chart, tf, 5.0);

  auto mapped = [&](Complex zeta) { return CVector(tf.forward(fam.eval(zeta))); };
  CHECK(disc_residual(pushed, mapped, fam.params.radius) < 1e-6);
}

TEST_CASE("two Levi-form routes agree through a solver disc") {
  // H_J(u)(p, V) versus the Laplacian of u o f at 0 for a J-disc f with
  // f(0) = p and df(0)(d/dxi) = V, built by correcting the solver datum.
  auto chart = perturbed_model(Complex(0.15, 0.05), 1e-2, 23);
  RealField u;
  u.eval = [](const CVector& z) {
    return z.squaredNorm() + 0.2 * (z[0] * std::conj(z[1])).real();
  };
  CVector p(2), v(2);
  p << Complex(0.05, 0.02), Complex(0.01, -0.1);
  v << Complex(0.6, 0.1), Complex(-0.2, 0.3);

  double route1 = levi_form(chart, u, p, v);

  // Solve for c with c + A(p) conj(c) = v, so the xi-derivative of the disc
  // is exactly v; then correct the datum so the disc passes through p.
  CMatrix a0 = chart.a(p);
  RMatrix sys = RMatrix::Identity(4, 4) + realify_antilinear(a0);
  CVector c = complexify(RVector(sys.partialPivLu().solve(realify(v))));

  SolverOptions opts;
  opts.nr = 128;
  opts.ntheta = 128;
  opts.tolerance = 5e-6;
  CVector p_target = p;
  HolomorphicDatum phi = HolomorphicDatum::line(p_target, c);
  DiscSolution sol = solve_disc(chart, phi, opts);
  for (int fix = 0; fix < 5; ++fix) {
    CVector at0 = sol.eval(Complex(0, 0));
    double h = 1e-5;
    CVector dz = (sol.eval(Complex(h, 0)) - sol.eval(Complex(-h, 0))) / (2 * h);
    CVector dzb = (sol.eval(Complex(0, h)) - sol.eval(Complex(0, -h))) / (2 * h);
    CVector zeta_deriv = 0.5 * (dz - kI * dzb);
    phi.coeffs[0][0] += p[0] - at0[0];
    phi.coeffs[1][0] += p[1] - at0[1];
    phi.coeffs[0][1] += c[0] - zeta_deriv[0];
    phi.coeffs[1][1] += c[1] - zeta_deriv[1];
    sol = solve_disc(chart, phi, opts);
  }

  auto composed = [&](Complex zeta) { return u.eval(sol.eval(zeta)); };
  double h = 1e-3;
  double route2 = (composed(Complex(h, 0)) + composed(Complex(-h, 0)) +
                   composed(Complex(0, h)) + composed(Complex(0, -h)) - 4.0 * composed(0)) /
                  (h * h);
  CHECK(std::abs(route1 - route2) < 2e-4);
}

TEST_CASE("scalar Beltrami-type solve in dimension 1") {
  // z_zbar = c conj(z)_zbar with a small constant c: the Picard iteration
  // settles on a quasiconformal perturbation of the datum.
  PolyMatrix table(1, 1, 1);
  table.add_term(0, 0, {0}, {0}, Complex(0.2, 0.1));
  AlmostComplexChart chart(table, 4.0);
  HolomorphicDatum phi;
  phi.coeffs = {{Complex(0, 0), Complex(1, 0)}};
  SolverOptions opts;
  opts.nr = 64;
  opts.ntheta = 64;
  opts.tolerance = 1e-11;
  DiscSolution sol = solve_disc(chart, phi, opts);
  CHECK(sol.residual < 1e-11);
  // closed form: z = zeta + c conj(zeta) solves the constant-c equation
  double worst = 0.0;
  for (int j = 0; j < sol.grid.nr(); ++j)
    for (int k = 0; k < sol.grid.ntheta(); ++k) {
      Complex zeta = sol.grid.node(j, k);
      worst = std::max(worst,
                       std::abs(sol.grid.value(j, k) - (zeta + Complex(0.2, 0.1) * std::conj(zeta))));
    }
  CHECK(worst < 1e-11);
}
