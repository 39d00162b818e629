#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "acx/polynomial.hpp"
#include "acx/types.hpp"

namespace acx {

/// Local representation of an almost complex structure J by its complex
/// matrix A(z): a disc z(zeta) is J-holomorphic iff
///   d z / d conj(zeta) - A(z) * d conj(z) / d conj(zeta) = 0.
/// A = 0 is the standard structure. Valid charts keep |A| < 1 in the
/// spectral norm so that J can be reconstructed.
class AlmostComplexChart {
 public:
  using MatrixEval = std::function<CMatrix(const CVector&)>;
  /// (z, m) -> entrywise derivative of A with respect to z_m (or conj z_m).
  using MatrixDerivEval = std::function<CMatrix(const CVector&, int)>;

  AlmostComplexChart() = default;

  /// Canonical constructor: polynomial coefficient table. Analytic
  /// derivatives are attached automatically.
  AlmostComplexChart(PolyMatrix table, double radius);

  /// Evaluator-backed chart (composed / pushforward charts). Derivatives
  /// fall back to central differences with step fd_step().
  AlmostComplexChart(int n, double radius, MatrixEval a);
  AlmostComplexChart(int n, double radius, MatrixEval a, MatrixDerivEval dz,
                     MatrixDerivEval dzbar);

  /// The standard structure A == 0.
  static AlmostComplexChart standard(int n, double radius = 1.0);

  int dimension() const { return n_; }
  double radius() const { return radius_; }
  bool contains(const CVector& z) const { return z.norm() <= radius_ * (1.0 + 1e-12); }

  CMatrix a(const CVector& z) const { return a_(z); }
  CMatrix da_dz(const CVector& z, int m) const;
  CMatrix da_dzbar(const CVector& z, int m) const;
  bool has_analytic_derivatives() const { return bool(dz_); }

  const std::optional<PolyMatrix>& poly() const { return poly_; }

  /// Central-difference step used for derivative fallbacks: 1e-4 * radius.
  double fd_step() const { return 1e-4 * radius_; }

 private:
  int n_ = 0;
  double radius_ = 0.0;
  MatrixEval a_;
  MatrixDerivEval dz_, dzbar_;
  std::optional<PolyMatrix> poly_;
};

struct ValidationReport {
  bool pass = false;
  double max_norm = 0.0;
  CVector argmax;
  double margin = 1e-6;
  int samples = 0;
};

/// Max spectral norm of A over the samples; passes iff < 1 - margin.
ValidationReport validate_chart(const AlmostComplexChart& chart,
                                const std::vector<CVector>& samples,
                                double margin = 1e-6);

/// Deterministic sample cloud in the chart ball (includes 0 and near-boundary
/// points).
std::vector<CVector> ball_samples(int n, double radius, int count, uint64_t seed);

/// Throws NormTooLarge when validation fails.
void require_valid(const AlmostComplexChart& chart, const std::vector<CVector>& samples,
                   double margin = 1e-6);

/// Reconstructs the real 2n x 2n matrix of J at z from A(z) via
/// J = J_st (I - L)(I + L)^{-1}, where L v = A conj(v). Requires |A(z)| < 1.
RMatrix j_matrix(const AlmostComplexChart& chart, const CVector& z);
RMatrix j_matrix_from_a(const CMatrix& a);

}  // namespace acx
