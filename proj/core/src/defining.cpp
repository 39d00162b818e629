#include "acx/defining.hpp"

#include "acx/errors.hpp"

namespace acx {

void DefiningFunction::check(double tol) const {
  if (std::abs(rho(base_point)) > tol)
    throw SpecError("base point does not lie on { rho = 0 }", "base_point");
  if (grad(base_point).norm() < tol)
    throw SpecError("gradient of rho vanishes at the base point", "rho");
}

DefiningFunction model_defining(int n) {
  DefiningFunction d;
  d.rho = [n](const CVector& z) {
    double s = z[n - 1].imag();
    for (int j = 0; j + 1 < n; ++j) s += std::norm(z[j]);
    return s;
  };
  d.grad = [n](const CVector& z) {
    CVector g = CVector::Zero(n);
    for (int j = 0; j + 1 < n; ++j) g[j] = 2.0 * z[j];
    g[n - 1] = Complex(0.0, 1.0);
    return g;
  };
  d.base_point = CVector::Zero(n);
  return d;
}

double boundary_distance(const DefiningFunction& d, const CVector& q, int max_iter) {
  CVector x = q;
  for (int it = 0; it < max_iter; ++it) {
    double r = d.rho(x);
    CVector g = d.grad(x);
    double g2 = 0.0;
    for (int i = 0; i < g.size(); ++i) g2 += std::norm(g[i]);
    if (g2 < 1e-18) break;
    // Real-gradient Newton step toward the zero set.
    x -= (r / g2) * g;
    if (std::abs(d.rho(x)) < 1e-14) break;
  }
  return (x - q).norm();
}

}  // namespace acx
