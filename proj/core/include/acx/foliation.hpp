#pragma once

#include <functional>
#include <vector>

#include "acx/chart.hpp"
#include "acx/types.hpp"

namespace acx {

/// Parametrized real submanifold N of real dimension n + d inside the chart:
/// psi maps (u in R^n, s in R^d) to a point of C^n. Tangent columns come
/// from the Jacobian (finite differences when absent).
struct SubmanifoldParametrization {
  int ambient_n = 0;   // complex dimension of the chart
  int intrinsic = 0;   // n + d
  std::function<CVector(const RVector&)> psi;
  std::function<CVector(const RVector&, int)> tangent;  // optional d psi / d u_i
  double fd_step = 1e-5;

  CVector tangent_at(const RVector& u, int i) const;
};

struct SliceCertificate {
  RVector s;                  // fixed transverse parameters
  double min_singular = 0.0;  // worst sigma_min of [B | JB] over the samples
  int samples = 0;
};

struct FoliationResult {
  std::vector<SliceCertificate> slices;
  double threshold = 1e-8;
};

/// Slices {last d parameters = const} of N, each certified totally real:
/// at sampled points the 2n x 2n matrix [basis | J basis] must have full
/// rank (smallest singular value above the threshold). Throws
/// TotallyRealFailure at the first degenerate sample.
FoliationResult foliate_generic(const SubmanifoldParametrization& param,
                                const AlmostComplexChart& chart, int d, int slice_count,
                                double param_box, int samples_per_slice = 9,
                                double threshold = 1e-8);

}  // namespace acx
