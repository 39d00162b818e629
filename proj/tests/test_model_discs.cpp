#include <doctest.h>

#include "acx/disc_solver.hpp"
#include "acx/errors.hpp"
#include "acx/model_discs.hpp"
#include "acx/rng.hpp"

using namespace acx;

static ModelStructure simple_model(Complex a) {
  ModelStructure m;
  m.n = 2;
  m.mu = CMatrix::Zero(1, 1);
  m.mu(0, 0) = a;
  return m;
}

TEST_CASE("mu = 0 family discs are affine lines with constant last component") {
  ModelStructure m = simple_model(0.0);
  CVector v(1);
  v[0] = Complex(0.6, 0.8);
  FamilyDisc disc = model_disc_family(m, v, Complex(0.1, -0.2), 1.0);
  CHECK(std::abs(disc.params.c) == 0.0);
  Complex zeta(0.3, -0.1);
  CVector z = disc.eval(zeta);
  CHECK(std::abs(z[0] - v[0] * zeta) < 1e-15);
  CHECK(std::abs(z[1] - Complex(0.1, -0.2)) < 1e-15);
}

TEST_CASE("coefficient matching validated by the residual oracle") {
  Rng rng(21);
  for (int trial = 0; trial < 4; ++trial) {
    Complex a = std::polar(0.45, rng.uniform(0, 2 * M_PI));
    ModelStructure m = simple_model(a);
    auto chart = model_chart(m, 1.2);
    CVector v(1);
    v[0] = rng.next_complex_normal();
    v[0] /= std::abs(v[0]);
    Complex anchor = Complex(0.1 * rng.next_normal(), -0.3);
    FamilyDisc disc = model_disc_family(m, v, anchor, 1.0);
    CHECK(disc_residual(chart, disc.eval, disc.params.radius) < 1e-12);
  }
}

TEST_CASE("Im z_n is constant along every family disc") {
  ModelStructure m = simple_model(Complex(0.8, -0.5));
  CVector v(1);
  v[0] = Complex(0, 1);
  Complex anchor(0.2, -0.17);
  FamilyDisc disc = model_disc_family(m, v, anchor, 2.0);
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    Complex zeta = std::polar(disc.params.radius * rng.next_double(),
                              rng.uniform(0, 2 * M_PI));
    CHECK(std::abs(disc.eval(zeta)[1].imag() - anchor.imag()) < 1e-14);
  }
}

TEST_CASE("family disc radius follows the anchor height") {
  ModelStructure m = simple_model(Complex(0.3, 0.2));
  CVector v(1);
  v[0] = 1.0;
  double alpha = 2.0;
  FamilyDisc d1 = model_disc_family(m, v, Complex(0, -0.1), alpha);
  FamilyDisc d2 = model_disc_family(m, v, Complex(0, -0.4), alpha);
  CHECK(d1.params.radius == doctest::Approx(std::sqrt(alpha * 0.1)));
  CHECK(d2.params.radius == doctest::Approx(std::sqrt(alpha * 0.4)));
  CHECK(d1.params.radius * d1.params.radius <= alpha * 0.1 + 1e-12);
}

TEST_CASE("parameter validation") {
  ModelStructure m = simple_model(0.2);
  CVector v(1);
  v[0] = 1.0;
  CHECK_THROWS_AS(model_disc_family(m, v, Complex(0.0, 0.1), 1.0), SpecError);
  CVector big(1);
  big[0] = 2.0;
  CHECK_THROWS_AS(model_disc_family(m, big, Complex(0.0, -0.1), 1.0), SpecError);
}

TEST_CASE("transverse normal disc") {
  ModelStructure m = simple_model(Complex(0.05, 0.02));
  TransverseDisc disc = transverse_normal_disc(m, 4.0);

  SUBCASE("residual sits at the differentiation floor since 'z = 0") {
    // The disc sweeps |z_2| up to ~9 on the truncated parametrization; a
    // small mu keeps |A| < 1 on that large a ball. The Moebius component is
    // holomorphic but not polynomial, so dbar_grid leaves an O(1/nr^2) floor.
    auto big_chart = model_chart(m, 10.0);
    auto inner = [&](Complex w) { return disc.eval_disc(0.4 * w); };
    double r32 = disc_residual(big_chart, inner, 1.0, 32, 32);
    double r64 = disc_residual(big_chart, inner, 1.0, 64, 64);
    CHECK(r32 < 5e-3);
    CHECK(r64 < r32 / 3.0);
  }

  SUBCASE("image lies in the model domain") {
    Rng rng(3);
    for (int i = 0; i < 30; ++i) {
      Complex zeta(rng.uniform(-3, 3), rng.uniform(-3, -0.01));
      CVector z = disc.eval_halfplane(zeta);
      double rho = z[1].imag() + std::norm(z[0]);
      CHECK(rho < 0.0);
    }
  }

  SUBCASE("the real axis maps to the boundary") {
    CVector z = disc.eval_halfplane(Complex(1.7, 0.0));
    CHECK(std::abs(z[1].imag() + std::norm(z[0])) < 1e-14);
  }
}

TEST_CASE("admissible filling family") {
  ModelStructure m = simple_model(Complex(0.4, 0.2));
  double alpha = 2.0;

  SUBCASE("anchor on the normal axis is the disc center") {
    Complex anchor(0.0, -0.05);
    FillFamily fam = fill_admissible(m, alpha, anchor, 8);
    REQUIRE(fam.discs.size() == 8);
    for (const auto& d : fam.discs) {
      CVector center = d.eval(Complex(0, 0));
      CHECK(center.head(1).norm() < 1e-15);
      CHECK(std::abs(center[1] - anchor) < 1e-15);
    }
  }

  SUBCASE("anchor outside the cone is rejected") {
    CHECK_THROWS_AS(fill_admissible(m, 0.5, Complex(1.0, -0.01), 4), DomainError);
  }

  SUBCASE("Siegel case: affine discs with |a| ~ sqrt(|y0|)") {
    ModelStructure siegel = simple_model(0.0);
    Complex anchor(0.0, -0.04);
    FillFamily fam = fill_admissible(siegel, alpha, anchor, 4);
    for (const auto& d : fam.discs) {
      CHECK(std::abs(d.params.c) == 0.0);
      CHECK(d.params.radius == doctest::Approx(std::sqrt(alpha * 0.04)));
    }
  }

  SUBCASE("sampled admissible points are covered by a family disc") {
    // q = (t e1 scaled, -2 i t^2) lies in A_alpha(0) for small t; the
    // covering disc must pass through it exactly.
    for (double t : {0.05, 0.1, 0.2}) {
      CVector q(2);
      q << Complex(t, 0.0), Complex(0.0, -2.0 * t * t);
      FamilyDisc d = covering_disc(m, q, alpha);
      // locate zeta = |'q| on the positive axis
      CVector at = d.eval(Complex(t, 0.0));
      CHECK((at - q).norm() < 1e-13);
      // anchor respects the (possibly slightly enlarged) cone bookkeeping
      double ratio = std::abs(d.params.anchor) / std::abs(d.params.anchor.imag());
      CHECK(ratio < (1.0 + alpha * (1.0 + 0.4)) + 1e-9);
    }
  }
}

TEST_CASE("n = 3 models: family discs and filling work with matrix mu") {
  ModelStructure m;
  m.n = 3;
  m.mu = CMatrix::Zero(2, 2);
  m.mu(0, 0) = Complex(0.3, -0.1);
  m.mu(0, 1) = Complex(-0.15, 0.2);
  m.mu(1, 0) = Complex(0.05, 0.1);
  m.mu(1, 1) = Complex(0.2, 0.0);
  auto chart = model_chart(m, 1.0);

  Rng rng(31);
  for (int trial = 0; trial < 3; ++trial) {
    CVector v = rng.next_unit_vector(2);
    Complex anchor(0.05 * rng.next_normal(), -0.25);
    FamilyDisc disc = model_disc_family(m, v, anchor, 1.0);
    CHECK(disc_residual(chart, disc.eval, disc.params.radius, 48, 48) < 5e-12);
    // constant imaginary part in the last component
    for (int i = 0; i < 16; ++i) {
      Complex zeta = std::polar(disc.params.radius * rng.next_double(),
                                rng.uniform(0, 2 * M_PI));
      CHECK(std::abs(disc.eval(zeta)[2].imag() - anchor.imag()) < 1e-14);
    }
  }

  SUBCASE("covering a point with nonzero tangential part") {
    CVector q(3);
    q << Complex(0.08, 0.03), Complex(-0.05, 0.06), Complex(0.01, -0.03);
    REQUIRE(q[2].imag() + std::norm(q[0]) + std::norm(q[1]) < 0.0);
    FamilyDisc d = covering_disc(m, q, 2.0);
    double s = q.head(2).norm();
    CHECK((d.eval(Complex(s, 0.0)) - q).norm() < 1e-13);
  }

  SUBCASE("transverse disc in n = 3") {
    TransverseDisc tr = transverse_normal_disc(m, 4.0);
    CVector z = tr.eval_halfplane(Complex(0.5, -1.0));
    CHECK(z.head(2).norm() == 0.0);
    CHECK(z[2] == Complex(0.5, -1.0));
  }
}
