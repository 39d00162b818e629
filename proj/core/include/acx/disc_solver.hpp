#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "acx/cauchy.hpp"
#include "acx/chart.hpp"
#include "acx/grid.hpp"
#include "acx/polynomial.hpp"

namespace acx {

/// Holomorphic datum for a disc solve: per-component polynomial coefficients
/// in zeta, phi_c(zeta) = sum_d coeffs[c][d] zeta^d.
struct HolomorphicDatum {
  std::vector<std::vector<Complex>> coeffs;

  int ncomp() const { return int(coeffs.size()); }
  CVector eval(Complex zeta) const;

  /// Disc through p with complex tangent v: phi(zeta) = p + v zeta.
  static HolomorphicDatum line(const CVector& p, const CVector& v);
};

struct SolverOptions {
  int nr = 96;
  int ntheta = 128;
  double tolerance = 1e-10;
  int max_iter = 60;
};

/// Solution of the quasilinear disc equation on the grid, plus an evaluator
/// phi + T[A(z) d conj(z)/d conj(zeta)] usable anywhere on the closed disc.
struct DiscSolution {
  DiscGrid grid;                      // node values of z(zeta), C^n-valued
  HolomorphicDatum datum;
  double residual = 0.0;              // sup-node norm of the equation defect
  int iterations = 0;
  std::vector<double> residual_history;
  std::function<CVector(Complex)> eval;

  /// sup over nodes of ||z||.
  double image_radius() const { return grid.sup_norm(); }
};

/// Picard iteration z_{k+1} = phi + T[A(z_k) d conj(z_k)/d conj(zeta)].
/// Converges when |A| is small on the tube swept by the iterates. Throws
/// NoConvergence (with the residual history) or IterateLeftChart.
DiscSolution solve_disc(const AlmostComplexChart& chart, const HolomorphicDatum& phi,
                        const SolverOptions& opts = {});

/// sup over interior nodes of |z_zbar - A(z) conj(z)_zbar|.
double disc_residual(const AlmostComplexChart& chart, const DiscGrid& z);

/// Variant for an analytic disc evaluator, sampled on a fresh grid scaled by
/// `param_radius` (a holomorphic reparametrization, so the residual is
/// preserved up to the scale factor).
double disc_residual(const AlmostComplexChart& chart,
                     const std::function<CVector(Complex)>& disc, double param_radius,
                     int nr = 64, int ntheta = 64);

}  // namespace acx
