#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "acx/types.hpp"

namespace acx {

/// Polar sample grid of the unit disc. Nodes sit at cell midpoints
/// r_j = (j + 1/2)/N_r, theta_k = 2 pi k / N_theta, so they avoid both the
/// origin and the boundary; cell areas add up to pi exactly.
class DiscGrid {
 public:
  DiscGrid() = default;
  DiscGrid(int nr, int ntheta, int ncomp);

  static DiscGrid sample(int nr, int ntheta, int ncomp,
                         const std::function<CVector(Complex)>& f);
  static DiscGrid sample_scalar(int nr, int ntheta, const std::function<Complex(Complex)>& f);

  int nr() const { return nr_; }
  int ntheta() const { return ntheta_; }
  int ncomp() const { return ncomp_; }
  long nodes() const { return long(nr_) * ntheta_; }

  double r(int j) const { return (j + 0.5) / nr_; }
  double theta(int k) const { return 2.0 * M_PI * k / ntheta_; }
  Complex node(int j, int k) const { return std::polar(r(j), theta(k)); }
  double cell_area(int j) const { return (2.0 * j + 1.0) * M_PI / (double(nr_) * nr_ * ntheta_); }
  long index(int j, int k) const { return long(j) * ntheta_ + k; }

  Complex value(int j, int k, int c = 0) const { return values_(index(j, k), c); }
  Complex& value(int j, int k, int c = 0) { return values_(index(j, k), c); }
  const CMatrix& values() const { return values_; }
  CMatrix& values() { return values_; }

  CVector value_vector(int j, int k) const { return values_.row(index(j, k)).transpose(); }

  /// Max node norm over all components.
  double sup_norm() const;
  /// Area-weighted L^p norm of the node values (vector 2-norm per node).
  double lp_norm(double p) const;
  /// Interior nodes exclude the first and last radial ring (where radial
  /// differences lose the centered stencil).
  bool is_interior(int j) const { return j >= 1 && j + 1 < nr_; }

  /// Bilinear interpolation in (r, theta); clamps radially to the node range.
  CVector interpolate(Complex zeta) const;

  void write_csv(std::ostream& os) const;
  static DiscGrid read_csv(std::istream& is);

 private:
  int nr_ = 0, ntheta_ = 0, ncomp_ = 0;
  CMatrix values_;
};

/// Equispaced samples on the unit circle (M even).
class BoundaryTrace {
 public:
  BoundaryTrace() = default;
  BoundaryTrace(int m, int ncomp);

  static BoundaryTrace sample(int m, int ncomp, const std::function<CVector(Complex)>& f);
  static BoundaryTrace sample_scalar(int m, const std::function<Complex(Complex)>& f);

  int size() const { return m_; }
  int ncomp() const { return ncomp_; }
  double theta(int k) const { return 2.0 * M_PI * k / m_; }
  Complex node(int k) const { return std::polar(1.0, theta(k)); }
  Complex value(int k, int c = 0) const { return values_(k, c); }
  Complex& value(int k, int c = 0) { return values_(k, c); }
  double sup_norm() const;

  void write_csv(std::ostream& os) const;
  static BoundaryTrace read_csv(std::istream& is);

 private:
  int m_ = 0, ncomp_ = 0;
  CMatrix values_;
};

/// Deterministic float formatting shared by all CSV writers ("%.17g").
std::string format_double(double x);

}  // namespace acx
