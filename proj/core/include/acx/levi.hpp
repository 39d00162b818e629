#pragma once

#include <functional>

#include "acx/chart.hpp"
#include "acx/types.hpp"

namespace acx {

/// Real-valued C^2 test function on the chart; optional analytic real
/// gradient (returned in the complex representation du/dx_j + i du/dy_j).
struct RealField {
  std::function<double(const CVector&)> eval;
  std::function<CVector(const CVector&)> grad;  // optional
  double fd_step = 1e-4;
};

/// Complex Hessian H_J(u)(p, V) = -(d J^* du)_p(X, JX), computed with the
/// constant extension X == V:
///   H = Hess u(V, V) + Hess u(W, W) + du((D_W J) V) + du(J (D_V J) V),
/// with W = J(p) V. Reduces to 4 sum u_{z_j zbar_k} V_j conj(V_k) for J_st.
double levi_form(const AlmostComplexChart& chart, const RealField& u, const CVector& p,
                 const CVector& v);

struct PshVerdict {
  bool strictly_psh = false;
  double min_value = 0.0;
  CVector argmin;
};

/// Samples K deterministic unit directions; strictly psh iff the Levi form
/// stays above eps on all of them.
PshVerdict is_strictly_psh_at(const AlmostComplexChart& chart, const RealField& u,
                              const CVector& p, int directions, double eps = 1e-8,
                              uint64_t seed = 7);

/// Hessian quadratic form of u at p along t -> p + t v (second directional
/// derivative), central differences.
double directional_hessian(const RealField& u, const CVector& p, const CVector& v, double h);

}  // namespace acx
