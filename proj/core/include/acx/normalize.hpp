#pragma once

#include "acx/chart.hpp"
#include "acx/transform.hpp"

namespace acx {

struct NormalizationResult {
  AlmostComplexChart chart;
  ChartTransformation transformation;
  double a_at_zero = 0.0;        // spectral norm of A(0) after the change
  double da_dz_at_zero = 0.0;    // max finite-difference |dA/dz_m(0)| after
};

/// Removes the constant and z-linear parts of A at the origin:
/// a linear step z -> z - A(0) conj(z) (conjugates J(0) to J_st), then the
/// quadratic shear z' = z + C(z, conj z) with
///   C_j = - sum_{k,m} dA_{jk}/dz_m(0) z_m conj(z_k).
/// Postconditions |A(0)| < 1e-12 and |dA/dz(0)|_FD < 1e-6 are checked.
NormalizationResult normalize_chart(const AlmostComplexChart& chart);

/// The two conditions of the normal form, measured by central differences.
bool is_normalized(const AlmostComplexChart& chart, double tol_a0 = 1e-10,
                   double tol_daz = 1e-6);

}  // namespace acx
