#include "acx/normalize.hpp"

#include "acx/errors.hpp"

namespace acx {

static double max_fd_dz_norm(const AlmostComplexChart& chart) {
  // Forced central differences at 0, independent of any attached analytic
  // derivative (this is the advertised acceptance check).
  double h = chart.fd_step();
  int n = chart.dimension();
  CVector zero = CVector::Zero(n);
  double worst = 0.0;
  for (int m = 0; m < n; ++m) {
    CVector zp = zero, zm = zero, zpi = zero, zmi = zero;
    zp[m] += h;
    zm[m] -= h;
    zpi[m] += Complex(0, h);
    zmi[m] -= Complex(0, h);
    CMatrix dx = (chart.a(zp) - chart.a(zm)) / (2 * h);
    CMatrix dy = (chart.a(zpi) - chart.a(zmi)) / (2 * h);
    CMatrix d = 0.5 * (dx - kI * dy);
    worst = std::max(worst, spectral_norm(d));
  }
  return worst;
}

bool is_normalized(const AlmostComplexChart& chart, double tol_a0, double tol_daz) {
  CVector zero = CVector::Zero(chart.dimension());
  if (spectral_norm(chart.a(zero)) > tol_a0) return false;
  return max_fd_dz_norm(chart) < tol_daz;
}

NormalizationResult normalize_chart(const AlmostComplexChart& chart) {
  int n = chart.dimension();
  CVector zero = CVector::Zero(n);
  CMatrix a0 = chart.a(zero);
  double s0 = spectral_norm(a0);
  if (s0 >= 1.0) throw NormTooLarge("A(0) has spectral norm >= 1", zero, s0);

  // Step 1: linear change z -> z - A(0) conj(z); makes the new A vanish at 0.
  ChartTransformation lin =
      ChartTransformation::linear(CMatrix::Identity(n, n), -a0);
  AlmostComplexChart chart1 =
      s0 < 1e-14 ? chart : pushforward(chart, lin, chart.radius() * (1.0 - s0));
  ChartTransformation total = s0 < 1e-14 ? ChartTransformation::identity(n) : lin;

  // Step 2: quadratic shear killing the z-linear jet of A at 0.
  std::vector<CMatrix> dz0(n);
  bool any = false;
  for (int m = 0; m < n; ++m) {
    dz0[m] = chart1.da_dz(zero, m);
    if (dz0[m].cwiseAbs().maxCoeff() > 1e-14) any = true;
  }

  AlmostComplexChart chart2 = chart1;
  if (any) {
    PolyMap shear(n, n);
    for (int j = 0; j < n; ++j) {
      MultiIndex a(n, 0), b(n, 0);
      a[j] = 1;
      shear.add_term(j, a, b, 1.0);
    }
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int m = 0; m < n; ++m) {
          Complex c = dz0[m](j, k);
          if (std::abs(c) < 1e-15) continue;
          MultiIndex a(n, 0), b(n, 0);
          a[m] += 1;
          b[k] += 1;
          shear.add_term(j, a, b, -c);
        }
      }
    }
    ChartTransformation quad = ChartTransformation::from_poly(shear);
    chart2 = pushforward(chart1, quad, chart1.radius() * 0.75);
    total = quad.compose_after(total);
  }

  NormalizationResult out{chart2, total, 0.0, 0.0};
  out.a_at_zero = spectral_norm(chart2.a(zero));
  out.da_dz_at_zero = max_fd_dz_norm(chart2);
  return out;
}

}  // namespace acx
