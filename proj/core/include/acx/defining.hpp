#pragma once

#include <functional>

#include "acx/types.hpp"

namespace acx {

/// Local defining function of a domain piece { rho < 0 } with a marked
/// boundary base point. Gradient is returned in the complex representation
/// (d rho/dx_j + i d rho/dy_j).
struct DefiningFunction {
  std::function<double(const CVector&)> rho;
  std::function<CVector(const CVector&)> grad;
  CVector base_point;

  void check(double tol = 1e-9) const;
};

/// The Siegel-type model boundary rho = Im z_n + |'z|^2 based at the origin.
DefiningFunction model_defining(int n);

/// Newton projection of q onto { rho = 0 }; returns the distance travelled.
double boundary_distance(const DefiningFunction& d, const CVector& q, int max_iter = 30);

}  // namespace acx
