#pragma once

#include <vector>

#include "acx/grid.hpp"
#include "acx/types.hpp"

namespace acx {

/// Orientation constant of the area form in the Cauchy-Green kernel. Pinned
/// by the probe T(1) = conj(zeta) on the disc (a unit test asserts it).
inline constexpr double kCauchyGreenOrientation = 1.0;

/// Discrete Cauchy-Green transform of a grid function: the area integral
/// inverting d/d conj(zeta) on the unit disc. Built once per input grid via
/// an angular DFT per ring and per-mode radial integration of the piecewise
/// quadratic interpolant, so smooth low-degree inputs are transformed to
/// near round-off accuracy. Evaluates anywhere on the plane: the result is
/// holomorphic outside the closed disc and vanishes at infinity.
class CauchyGreen {
 public:
  explicit CauchyGreen(const DiscGrid& f);

  int ncomp() const { return ncomp_; }

  /// T f at an arbitrary point of the plane.
  CVector eval(Complex zeta) const;
  Complex eval_scalar(Complex zeta, int comp = 0) const;

  /// T f at the source grid nodes (fast path, one inverse FFT per ring).
  DiscGrid on_grid() const;

  /// Trace of T f on the unit circle.
  BoundaryTrace boundary_trace(int m) const;

 private:
  struct ModeData {
    // Quadratic cell coefficients of the radial profile, as d0 + d1 r + d2 r^2.
    std::vector<Complex> d0, d1, d2;
    // Folded cumulative integrals at node radii (see cauchy.cpp).
    std::vector<Complex> prefix;  // m <= 0 branch
    std::vector<Complex> suffix;  // m >= 1 branch
    Complex full{0.0, 0.0};       // int_0^1 g r^{1-m} dr, m <= 0 only
  };

  Complex mode_value(const ModeData& md, int m, double s) const;

  int nr_ = 0, ntheta_ = 0, ncomp_ = 0;
  std::vector<std::vector<ModeData>> comp_modes_;  // [comp][bin]
};

inline CauchyGreen cauchy_green(const DiscGrid& f) { return CauchyGreen(f); }

/// Cauchy transform of a boundary trace: the classical line integral
/// (1/2 pi i) * contour integral of f(w) dw / (w - zeta), by the M-point
/// trapezoid rule. Evaluation requires |zeta| <= 1 - 2 pi / M.
class CauchyIntegral {
 public:
  explicit CauchyIntegral(BoundaryTrace trace) : trace_(std::move(trace)) {}

  CVector eval(Complex zeta) const;
  Complex eval_scalar(Complex zeta, int comp = 0) const;
  double guard_radius() const { return 1.0 - 2.0 * M_PI / trace_.size(); }

 private:
  BoundaryTrace trace_;
};

inline CauchyIntegral cauchy_integral(BoundaryTrace trace) {
  return CauchyIntegral(std::move(trace));
}

/// d f / d conj(zeta) on the grid: spectral in theta, centered differences
/// in r (one-sided at the outer ring, reflected ghost ring at the center).
/// Exact on polynomials in (zeta, conj zeta) of bi-degree <= 2.
DiscGrid dbar_grid(const DiscGrid& f);

/// d f / d zeta, same stencil family.
DiscGrid dzeta_grid(const DiscGrid& f);

struct Decomposition {
  DiscGrid g;      // f - T(dbar f); discretely holomorphic part
  DiscGrid tpart;  // T(dbar f)
};

/// Splits f = g + T(f_zbar) at the nodes.
Decomposition decompose_subsolution(const DiscGrid& f);

}  // namespace acx
