#include <doctest.h>

#include "acx/disc_solver.hpp"
#include "acx/experiments.hpp"
#include "acx/model_discs.hpp"

using namespace acx;

static ApproachRegion siegel_region(double alpha) {
  return ApproachRegion(RegionKind::Admissible, alpha, model_defining(2),
                        AlmostComplexChart::standard(2));
}

TEST_CASE("pullback of a subsolution along a disc") {
  SUBCASE("holomorphic field on the integrable chart: bound about zero") {
    auto field = fields::coordinate(2, 1);
    DiscGrid disc = DiscGrid::sample(48, 48, 2, [](Complex zeta) {
      CVector v(2);
      v << 0.2 * zeta, Complex(0, -0.3) + 0.1 * zeta * zeta;
      return v;
    });
    auto rep = pullback_subsolution(field, disc);
    CHECK(rep.sup_dbar < 1e-10);
  }

  SUBCASE("F = conj(z1) pulled along 'z = v zeta gives exactly conj(v1)") {
    ScalarField field;
    field.name = "conj_z1";
    field.eval = [](const CVector& z) { return std::conj(z[0]); };
    field.sup_bound = 1.0;
    field.dbar_bound = 1.0;
    Complex v1(0.4, -0.2);
    DiscGrid disc = DiscGrid::sample(32, 32, 2, [v1](Complex zeta) {
      CVector v(2);
      v << v1 * zeta, Complex(0, -0.2);
      return v;
    });
    auto rep = pullback_subsolution(field, disc);
    DiscGrid db = dbar_grid(rep.composed);
    double worst = 0.0;
    for (int j = 1; j + 1 < db.nr(); ++j)
      for (int k = 0; k < db.ntheta(); ++k)
        worst = std::max(worst, std::abs(db.value(j, k) - std::conj(v1)));
    CHECK(worst < 1e-12);
    CHECK(rep.certified);
  }

  SUBCASE("exp(i/z_n) composed with the inner normal disc is holomorphic") {
    ModelStructure m;
    m.n = 2;
    m.mu = CMatrix::Zero(1, 1);
    m.mu(0, 0) = Complex(0.05, 0.0);
    TransverseDisc tr = transverse_normal_disc(m, 4.0);
    DiscGrid disc = DiscGrid::sample(48, 48, 2,
                                     [&](Complex w) { return tr.eval_disc(0.5 * w); });
    auto rep = pullback_subsolution(fields::exp_inv_zn(2), disc);
    CHECK(rep.sup_dbar < 1e-3);
    CHECK(rep.certified);  // declared dbar bound 0 plus the small floor slack
  }

  SUBCASE("certificate bound: |dbar(F o h)| <= C * C1-norm * 1.1") {
    auto field = fields::conj_coordinate_half(2, 0);
    DiscGrid disc = DiscGrid::sample(32, 32, 2, [](Complex zeta) {
      CVector v(2);
      v << Complex(0.7, 0.1) * zeta, Complex(0, -0.4) + 0.2 * zeta;
      return v;
    });
    auto rep = pullback_subsolution(field, disc);
    CHECK(rep.certified);
    CHECK(rep.sup_dbar > 0.1);  // genuinely nonzero
  }
}

TEST_CASE("constants have the admissible limit everywhere") {
  auto field = fields::constant(2, Complex(0.7, -0.2));
  ExperimentOptions opts;
  opts.schedule.k_max = 14;
  auto v = admissible_limit_experiment(field, siegel_region(2.0), opts);
  CHECK(v.status == LimitStatus::Limit);
  CHECK(std::abs(v.value - Complex(0.7, -0.2)) < 1e-12);
  CHECK(v.curve);
  CHECK(v.curve_agrees);
}

TEST_CASE("Lindelof-type witness: exp(i/z2) + conj(z1)/2 has admissible limit 0") {
  auto field = fields::exp_inv_plus_conj(2);
  for (double alpha : {0.5, 2.0, 8.0}) {
    CAPTURE(alpha);
    ExperimentOptions opts;
    opts.seed = 7;
    auto v = admissible_limit_experiment(field, siegel_region(alpha), opts);
    CHECK(v.status == LimitStatus::Limit);
    CHECK(std::abs(v.value) < 5e-3);
    CHECK(v.tail_oscillation < 5e-3);
    CHECK(v.curve);
    CHECK(v.curve->status == LimitStatus::Limit);
    CHECK(v.curve_agrees);
  }
}

TEST_CASE("negative witness: (z2)^i has no admissible limit at 0") {
  auto field = fields::zn_pow_i(2);
  ExperimentOptions opts;
  opts.seed = 3;
  auto v = admissible_limit_experiment(field, siegel_region(2.0), opts);
  CHECK(v.status == LimitStatus::NoLimit);
  CHECK(v.tail_oscillation > 0.1);
  CHECK(v.curve_agrees);  // curve does not converge either, so no conflict
}

TEST_CASE("negative control: the tangential parabola is not a valid approach") {
  // F = exp(i/z2) evaluated along z2 = t - i t^2 oscillates at every scale;
  // the harness must not certify a limit from these values.
  auto field = fields::exp_inv_zn(2);
  std::vector<double> scales;
  std::vector<std::vector<Complex>> samples;
  for (int k = 3; k <= 16; ++k) {
    double t = std::pow(2.0, -k);
    std::vector<Complex> row;
    for (double u : {1.0, 1.15, 1.3, 1.45, 1.6}) {
      CVector q(2);
      q << Complex(0, 0), Complex(u * t, -(u * t) * (u * t));
      row.push_back(field.eval(q));
    }
    scales.push_back(t);
    samples.push_back(std::move(row));
  }
  auto est = limit_verdict(samples, scales, 5e-3, 3);
  CHECK(est.status == LimitStatus::NoLimit);
  for (const auto& row : est.table) CHECK(row.oscillation > 0.1);
}

TEST_CASE("curve/region consistency across the catalog") {
  ExperimentOptions opts;
  opts.seed = 13;
  for (const auto& field : fields::catalog(2)) {
    CAPTURE(field.name);
    auto v = admissible_limit_experiment(field, siegel_region(2.0), opts);
    CHECK(v.curve_agrees);
    if (v.curve && v.curve->status == LimitStatus::Limit)
      CHECK(v.status == LimitStatus::Limit);
  }
}

TEST_CASE("fatou scan on a small edge grid") {
  auto chart = AlmostComplexChart::standard(2);
  ExperimentOptions opts;
  opts.seed = 5;
  opts.schedule.k_max = 24;

  SUBCASE("continuous fields score 1.0") {
    auto field = fields::coordinate(2, 1);
    auto edge = model_edge_grid(2, 4, 4, 0.08, 0.2, 0.5);
    auto scan = fatou_scan(field, chart, edge, 2.0, opts);
    CHECK(scan.existence_fraction == 1.0);
  }

  SUBCASE("inner-function field scores 1.0 away from the exceptional set") {
    auto field = fields::exp_inv_zn(2);
    auto edge = model_edge_grid(2, 4, 4, 0.08, 0.2, 0.5);  // z2 != 0 on the grid
    auto scan = fatou_scan(field, chart, edge, 2.0, opts);
    CHECK(scan.existence_fraction >= 0.99);
  }

  SUBCASE("the exceptional point of (z2)^i reports no-limit") {
    auto field = fields::zn_pow_i(2);
    std::vector<CVector> exceptional = {CVector::Zero(2)};
    auto scan = fatou_scan(field, chart, exceptional, 2.0, opts);
    CHECK(scan.no_limits == 1);
    // and the same field converges at regular edge points
    auto edge = model_edge_grid(2, 3, 3, 0.08, 0.2, 0.4);
    auto scan2 = fatou_scan(field, chart, edge, 2.0, opts);
    CHECK(scan2.existence_fraction == 1.0);
  }
}
