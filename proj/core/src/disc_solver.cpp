#include "acx/disc_solver.hpp"

#include "acx/errors.hpp"

namespace acx {

CVector HolomorphicDatum::eval(Complex zeta) const {
  CVector out = CVector::Zero(ncomp());
  for (int c = 0; c < ncomp(); ++c) {
    Complex acc{0, 0}, pw{1, 0};
    for (const auto& cd : coeffs[c]) {
      acc += cd * pw;
      pw *= zeta;
    }
    out[c] = acc;
  }
  return out;
}

HolomorphicDatum HolomorphicDatum::line(const CVector& p, const CVector& v) {
  HolomorphicDatum d;
  d.coeffs.resize(p.size());
  for (int c = 0; c < p.size(); ++c) d.coeffs[c] = {p[c], v[c]};
  return d;
}

static DiscGrid apply_a(const AlmostComplexChart& chart, const DiscGrid& z,
                        const DiscGrid& zbar_dzbar) {
  DiscGrid g(z.nr(), z.ntheta(), z.ncomp());
  for (int j = 0; j < z.nr(); ++j) {
    for (int k = 0; k < z.ntheta(); ++k) {
      CMatrix a = chart.a(z.value_vector(j, k));
      g.values().row(g.index(j, k)) =
          (a * zbar_dzbar.value_vector(j, k)).transpose();
    }
  }
  return g;
}

static double residual_from(const DiscGrid& z, const DiscGrid& rhs) {
  DiscGrid zbar = dbar_grid(z);
  double worst = 0.0;
  for (int j = 0; j < z.nr(); ++j) {
    if (!z.is_interior(j)) continue;
    for (int k = 0; k < z.ntheta(); ++k)
      worst = std::max(worst,
                       (zbar.value_vector(j, k) - rhs.value_vector(j, k)).norm());
  }
  return worst;
}

DiscSolution solve_disc(const AlmostComplexChart& chart, const HolomorphicDatum& phi,
                        const SolverOptions& opts) {
  const int n = chart.dimension();
  if (phi.ncomp() != n) throw SpecError("datum dimension does not match the chart", "phi");

  DiscGrid phig = DiscGrid::sample(opts.nr, opts.ntheta, n,
                                   [&](Complex zeta) { return phi.eval(zeta); });
  DiscGrid z = phig;
  std::vector<double> history;
  DiscGrid g(opts.nr, opts.ntheta, n);

  for (int it = 1; it <= opts.max_iter; ++it) {
    // conj(z)_zbar = conj(z_zeta)
    DiscGrid dz = dzeta_grid(z);
    DiscGrid zbar_dzbar = dz;
    zbar_dzbar.values() = dz.values().conjugate();

    for (int j = 0; j < z.nr(); ++j)
      for (int k = 0; k < z.ntheta(); ++k)
        if (z.value_vector(j, k).norm() > chart.radius())
          throw IterateLeftChart(z.value_vector(j, k), chart.radius());

    g = apply_a(chart, z, zbar_dzbar);
    double res = residual_from(z, g);
    history.push_back(res);
    if (res < opts.tolerance) {
      CauchyGreen t(g);
      DiscSolution out{z, phi, res, it, history, nullptr};
      auto tptr = std::make_shared<CauchyGreen>(std::move(t));
      out.eval = [phi, tptr](Complex zeta) {
        return CVector(phi.eval(zeta) + tptr->eval(zeta));
      };
      return out;
    }

    CauchyGreen t(g);
    DiscGrid tg = t.on_grid();
    z = phig;
    z.values() += tg.values();
  }

  throw NoConvergence("disc solve did not reach tolerance " +
                          std::to_string(opts.tolerance) + " in " +
                          std::to_string(opts.max_iter) + " iterations",
                      history);
}

double disc_residual(const AlmostComplexChart& chart, const DiscGrid& z) {
  for (int j = 0; j < z.nr(); ++j)
    for (int k = 0; k < z.ntheta(); ++k)
      if (z.value_vector(j, k).norm() > chart.radius() * (1 + 1e-9))
        throw IterateLeftChart(z.value_vector(j, k), chart.radius());
  DiscGrid dz = dzeta_grid(z);
  DiscGrid zbar_dzbar = dz;
  zbar_dzbar.values() = dz.values().conjugate();
  DiscGrid rhs = apply_a(chart, z, zbar_dzbar);
  return residual_from(z, rhs);
}

double disc_residual(const AlmostComplexChart& chart,
                     const std::function<CVector(Complex)>& disc, double param_radius,
                     int nr, int ntheta) {
  DiscGrid z = DiscGrid::sample(nr, ntheta, chart.dimension(),
                                [&](Complex zeta) { return disc(param_radius * zeta); });
  // z(w) = disc(rho w) satisfies the equation with an extra factor rho on
  // both sides, so the defect scales by rho.
  return disc_residual(chart, z) / param_radius;
}

}  // namespace acx
