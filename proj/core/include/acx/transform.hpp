#pragma once

#include <functional>
#include <optional>

#include "acx/chart.hpp"
#include "acx/polynomial.hpp"
#include "acx/types.hpp"

namespace acx {

/// Coordinate change z -> z' with enough structure to push charts forward:
/// forward map, both Wirtinger Jacobians, and an inverse. Polynomial maps
/// (degree <= 2 in this library) get their inverse from a damped fixed-point
/// iteration seeded at the inverse of the linear part.
class ChartTransformation {
 public:
  using VecEval = std::function<CVector(const CVector&)>;
  using JacEval = std::function<CMatrix(const CVector&)>;

  ChartTransformation() = default;
  ChartTransformation(int n, VecEval forward, JacEval jac_z, JacEval jac_zbar, VecEval inverse)
      : n_(n),
        forward_(std::move(forward)),
        inverse_(std::move(inverse)),
        jac_z_(std::move(jac_z)),
        jac_zbar_(std::move(jac_zbar)) {}

  static ChartTransformation identity(int n);
  /// z -> B z + C conj(z); B + C-conjugation must be R-invertible.
  static ChartTransformation linear(const CMatrix& b, const CMatrix& c);
  static ChartTransformation from_poly(const PolyMap& map);
  /// Isotropic dilation t -> t / lambda.
  static ChartTransformation isotropic_dilation(int n, double lambda);
  /// Nonisotropic dilation ('z, z_n) -> ('z / sqrt(lambda), z_n / lambda).
  static ChartTransformation nonisotropic_dilation(int n, double lambda);

  /// g.compose_after(f) is the map z -> g(f(z)), with chain-rule Jacobians
  /// and composed inverse.
  ChartTransformation compose_after(const ChartTransformation& f) const;

  int dimension() const { return n_; }
  CVector forward(const CVector& z) const { return forward_(z); }
  CVector inverse(const CVector& w) const { return inverse_(w); }
  CMatrix jacobian_z(const CVector& z) const { return jac_z_(z); }
  CMatrix jacobian_zbar(const CVector& z) const { return jac_zbar_(z); }

  /// Real differential acting on a tangent vector (complex representation).
  CVector push_tangent(const CVector& z, const CVector& v) const;

  const std::optional<PolyMap>& poly() const { return poly_; }

 private:
  int n_ = 0;
  VecEval forward_, inverse_;
  JacEval jac_z_, jac_zbar_;
  std::optional<PolyMap> poly_;
};

/// Transformation rule for the complex matrix under z -> z':
///   A' = (z'_z A + z'_zbar)(conj(z'_z) + conj(z'_zbar) A)^{-1},
/// evaluated at z = inverse(z'). The new chart ball radius can be given
/// explicitly; by default the source radius is kept.
AlmostComplexChart pushforward(const AlmostComplexChart& chart, const ChartTransformation& tf,
                               std::optional<double> new_radius = std::nullopt);

/// The rule above at a single point (z in source coordinates).
CMatrix pushforward_at(const AlmostComplexChart& chart, const ChartTransformation& tf,
                       const CVector& z);

}  // namespace acx
