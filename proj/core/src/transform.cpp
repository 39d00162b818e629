#include "acx/transform.hpp"

#include <Eigen/LU>

#include "acx/errors.hpp"

namespace acx {

ChartTransformation ChartTransformation::identity(int n) {
  return from_poly(PolyMap::identity(n));
}

ChartTransformation ChartTransformation::linear(const CMatrix& b, const CMatrix& c) {
  int n = int(b.rows());
  PolyMap map(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      MultiIndex a0(n, 0), b0(n, 0);
      if (b(i, j) != 0.0) {
        MultiIndex a = a0;
        a[j] = 1;
        map.add_term(i, a, b0, b(i, j));
      }
      if (c(i, j) != 0.0) {
        MultiIndex bb = b0;
        bb[j] = 1;
        map.add_term(i, a0, bb, c(i, j));
      }
    }
  }
  return from_poly(map);
}

ChartTransformation ChartTransformation::from_poly(const PolyMap& map) {
  int n = map.dim();
  if (map.ncomp() != n) throw SpecError("transformation must map C^n to C^n", "map");

  CMatrix b, c;
  CVector constant;
  map.linear_part(b, c, constant);
  RMatrix lin = realify_linear(b) + realify_antilinear(c);
  Eigen::PartialPivLU<RMatrix> lu(lin);
  double det = std::abs(lu.determinant());
  if (det < 1e-14) throw SpecError("transformation linear part is singular", "map");
  RMatrix lin_inv = lu.inverse();

  auto fwd = [map](const CVector& z) { return map.eval(z); };
  auto jz = [map](const CVector& z) { return map.jacobian_z(z); };
  auto jzb = [map](const CVector& z) { return map.jacobian_zbar(z); };

  // Damped fixed-point inverse seeded at the linear inverse:
  //   z_{k+1} = z_k + tau * Lin^{-1}(w - P(z_k)).
  // Exact in one step for linear maps and shears; gives up after 50 rounds.
  auto inv = [map, lin_inv, constant](const CVector& w) {
    CVector rhs = w - constant;
    CVector z = complexify(lin_inv * realify(rhs));
    double tau = 1.0;
    for (int it = 0; it < 50; ++it) {
      CVector err = w - map.eval(z);
      double e = err.norm();
      if (e < 1e-13 * (1.0 + w.norm())) return z;
      z += tau * complexify(lin_inv * realify(err));
      if (it == 25) tau = 0.5;  // damp if the quadratic terms fight back
    }
    CVector err = w - map.eval(z);
    if (err.norm() < 1e-10 * (1.0 + w.norm())) return z;
    throw InverseDiverged("transformation inverse did not converge in 50 iterations");
  };

  ChartTransformation out(n, fwd, jz, jzb, inv);
  out.poly_ = map;
  return out;
}

ChartTransformation ChartTransformation::isotropic_dilation(int n, double lambda) {
  if (lambda <= 0) throw SpecError("dilation scale must be positive", "lambda");
  CMatrix b = CMatrix::Identity(n, n) / lambda;
  return linear(b, CMatrix::Zero(n, n));
}

ChartTransformation ChartTransformation::nonisotropic_dilation(int n, double lambda) {
  if (lambda <= 0) throw SpecError("dilation scale must be positive", "lambda");
  CMatrix b = CMatrix::Identity(n, n);
  for (int i = 0; i + 1 < n; ++i) b(i, i) = 1.0 / std::sqrt(lambda);
  b(n - 1, n - 1) = 1.0 / lambda;
  return linear(b, CMatrix::Zero(n, n));
}

ChartTransformation ChartTransformation::compose_after(const ChartTransformation& f) const {
  const ChartTransformation g = *this;
  int n = n_;
  auto fwd = [g, f](const CVector& z) { return g.forward(f.forward(z)); };
  // (g o f)_z = g_w f_z + g_wbar conj(f_zbar); (g o f)_zbar = g_w f_zbar + g_wbar conj(f_z).
  auto jz = [g, f](const CVector& z) {
    CVector w = f.forward(z);
    return CMatrix(g.jacobian_z(w) * f.jacobian_z(z) +
                   g.jacobian_zbar(w) * f.jacobian_zbar(z).conjugate());
  };
  auto jzb = [g, f](const CVector& z) {
    CVector w = f.forward(z);
    return CMatrix(g.jacobian_z(w) * f.jacobian_zbar(z) +
                   g.jacobian_zbar(w) * f.jacobian_z(z).conjugate());
  };
  auto inv = [g, f](const CVector& w) { return f.inverse(g.inverse(w)); };
  return ChartTransformation(n, fwd, jz, jzb, inv);
}

CVector ChartTransformation::push_tangent(const CVector& z, const CVector& v) const {
  return jacobian_z(z) * v + jacobian_zbar(z) * v.conjugate();
}

CMatrix pushforward_at(const AlmostComplexChart& chart, const ChartTransformation& tf,
                       const CVector& z) {
  CMatrix a = chart.a(z);
  CMatrix jz = tf.jacobian_z(z);
  CMatrix jzb = tf.jacobian_zbar(z);
  CMatrix num = jz * a + jzb;
  CMatrix den = jz.conjugate() + jzb.conjugate() * a;
  Eigen::PartialPivLU<CMatrix> lu(den);
  if (std::abs(lu.determinant()) < 1e-14) throw SingularDenominator(z);
  // Right division num * den^{-1} through the transposed system.
  CMatrix xt = den.transpose().partialPivLu().solve(num.transpose());
  return xt.transpose();
}

AlmostComplexChart pushforward(const AlmostComplexChart& chart, const ChartTransformation& tf,
                               std::optional<double> new_radius) {
  double r = new_radius.value_or(chart.radius());
  auto eval = [chart, tf](const CVector& w) {
    CVector z = tf.inverse(w);
    return pushforward_at(chart, tf, z);
  };
  return AlmostComplexChart(chart.dimension(), r, eval);
}

}  // namespace acx
