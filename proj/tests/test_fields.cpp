#include <doctest.h>

#include "acx/fields.hpp"
#include "acx/rng.hpp"

using namespace acx;

static std::vector<CVector> siegel_samples(int count, uint64_t seed) {
  // Interior points of the model domain Im z2 + |z1|^2 < 0 near the origin.
  Rng rng(seed);
  std::vector<CVector> out;
  while (int(out.size()) < count) {
    CVector q(2);
    q << Complex(rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2)),
        Complex(rng.uniform(-0.2, 0.2), rng.uniform(-0.5, -1e-3));
    if (q[1].imag() + std::norm(q[0]) < 0) out.push_back(q);
  }
  return out;
}

TEST_CASE("catalog fields verify their declared bounds on the Siegel domain") {
  auto chart = AlmostComplexChart::standard(2);
  auto samples = siegel_samples(300, 3);
  for (const auto& f : fields::catalog(2)) {
    CAPTURE(f.name);
    auto check = verify_declared_bounds(f, chart, samples);
    CHECK(check.ok);
  }
}

TEST_CASE("exp(i/z_n) values and bounds") {
  auto f = fields::exp_inv_zn(2);
  CVector q(2);
  q << Complex(0, 0), Complex(0, -0.1);
  // exp(i / (-0.1 i)) = exp(-10)
  CHECK(std::abs(f.eval(q) - std::exp(-10.0)) < 1e-14);
  // |F| = exp(Im z2 / |z2|^2) <= 1 inside
  for (const auto& z : siegel_samples(100, 5)) CHECK(std::abs(f.eval(z)) <= 1.0 + 1e-12);
}

TEST_CASE("zn_pow_i modulus depends only on the argument") {
  auto f = fields::zn_pow_i(2);
  CVector q(2);
  q << Complex(0, 0), Complex(0, -0.25);
  // (-i t)^i has modulus e^{pi/2} on the negative imaginary axis
  CHECK(std::abs(std::abs(f.eval(q)) - std::exp(M_PI / 2)) < 1e-12);
  CVector q2 = q;
  q2[1] = Complex(0, -0.003);
  CHECK(std::abs(std::abs(f.eval(q2)) - std::exp(M_PI / 2)) < 1e-12);
}

TEST_CASE("dbar_J residual of conj-linear fields uses the chart matrix") {
  // F = conj(z1)/2: F_zbar = (1/2, 0); under A == 0 the residual is 1/2.
  auto chart = AlmostComplexChart::standard(2);
  auto f = fields::conj_coordinate_half(2, 0);
  CVector q(2);
  q << Complex(0.1, 0.0), Complex(0.0, -0.2);
  CHECK(f.dbar_j_residual(chart, q) == doctest::Approx(0.5));
}

TEST_CASE("finite-difference gradients match analytic ones") {
  auto f = fields::exp_inv_zn(2);
  ScalarField fd = f;
  fd.grad_z = nullptr;
  fd.grad_zbar = nullptr;
  CVector q(2);
  q << Complex(0.05, 0.02), Complex(0.1, -0.3);
  CHECK((f.grad_z_at(q) - fd.grad_z_at(q)).norm() < 1e-7);
  CHECK((f.grad_zbar_at(q) - fd.grad_zbar_at(q)).norm() < 1e-7);
}
