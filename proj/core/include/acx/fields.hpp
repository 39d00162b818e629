#pragma once

#include <functional>
#include <string>
#include <vector>

#include "acx/chart.hpp"
#include "acx/types.hpp"

namespace acx {

/// Bounded C^1 test function on a domain with declared sup and dbar_J bounds.
/// The dbar_J residual in a chart is F_zbar + F_z A(z) (row vectors).
struct ScalarField {
  std::string name;
  std::function<Complex(const CVector&)> eval;
  // Optional analytic Wirtinger gradients (row vectors).
  std::function<CVector(const CVector&)> grad_z;
  std::function<CVector(const CVector&)> grad_zbar;
  double sup_bound = 0.0;
  double dbar_bound = 0.0;

  CVector grad_z_at(const CVector& z, double h = 1e-6) const;
  CVector grad_zbar_at(const CVector& z, double h = 1e-6) const;

  /// ||F_zbar + F_z A(z)|| at z.
  double dbar_j_residual(const AlmostComplexChart& chart, const CVector& z) const;
};

struct BoundCheck {
  bool ok = false;
  double max_abs = 0.0;
  double max_dbar = 0.0;
};

/// Samples |F| and the dbar_J residual over the provided points and compares
/// with the declared bounds (10% slack).
BoundCheck verify_declared_bounds(const ScalarField& field, const AlmostComplexChart& chart,
                                  const std::vector<CVector>& samples);

/// Frozen catalog on the model domains (coordinates, conj-linear fields,
/// exp(i/z_n), the principal branch of z_n^i, cutoff products).
namespace fields {

ScalarField constant(int n, Complex c);
ScalarField coordinate(int n, int j);
ScalarField conj_coordinate_half(int n, int j);  // conj(z_j)/2
ScalarField exp_inv_zn(int n);                   // exp(i / z_n), Im z_n < 0
ScalarField zn_pow_i(int n);                     // exp(i Log z_n), Im z_n < 0
ScalarField exp_inv_plus_conj(int n);            // exp(i/z_n) + conj(z_1)/2
ScalarField cutoff_product(int n);               // chi(|z|) z_n^{1+i}

/// All of the above for dimension n (the experiment catalog).
std::vector<ScalarField> catalog(int n);

}  // namespace fields

}  // namespace acx
