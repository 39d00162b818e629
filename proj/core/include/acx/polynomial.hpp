#pragma once

#include <vector>

#include "acx/types.hpp"

namespace acx {

using MultiIndex = std::vector<int>;

/// One monomial c * z^alpha * conj(z)^beta placed at (row, col) of a matrix
/// (or at component `row` of a vector when col is unused).
struct PolyTerm {
  int row = 0;
  int col = 0;
  MultiIndex alpha;
  MultiIndex beta;
  Complex coeff;
};

/// Matrix-valued polynomial in (z, conj(z)) over C^dim.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols, int dim) : rows_(rows), cols_(cols), dim_(dim) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int dim() const { return dim_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }

  void add_term(int row, int col, MultiIndex alpha, MultiIndex beta, Complex c);
  void add_term(const PolyTerm& t) { terms_.push_back(t); }

  CMatrix eval(const CVector& z) const;

  /// d/dz_m and d/dzbar_m as polynomial tables.
  PolyMatrix dz(int m) const;
  PolyMatrix dzbar(int m) const;

  int degree() const;

  /// Max coefficient-sum row norm, a cheap upper bound for sup of the
  /// spectral norm over the ball of radius r.
  double coeff_bound(double r) const;

 private:
  int rows_ = 0, cols_ = 0, dim_ = 0;
  std::vector<PolyTerm> terms_;
};

/// Vector-valued polynomial map C^dim -> C^ncomp in (z, conj(z)).
/// Terms use `row` as the output component; col is ignored.
class PolyMap {
 public:
  PolyMap() = default;
  PolyMap(int ncomp, int dim) : ncomp_(ncomp), dim_(dim) {}

  int ncomp() const { return ncomp_; }
  int dim() const { return dim_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }

  void add_term(int comp, MultiIndex alpha, MultiIndex beta, Complex c);

  CVector eval(const CVector& z) const;

  /// Jacobians [d f_i / d z_j] and [d f_i / d zbar_j].
  CMatrix jacobian_z(const CVector& z) const;
  CMatrix jacobian_zbar(const CVector& z) const;

  /// Splits off the terms of total degree one as a pair (B, C) with
  /// linear part z -> B z + C conj(z); constant terms returned separately.
  void linear_part(CMatrix& b, CMatrix& c, CVector& constant) const;

  int degree() const;

  static PolyMap identity(int dim);

 private:
  int ncomp_ = 0, dim_ = 0;
  std::vector<PolyTerm> terms_;
};

Complex eval_monomial(const CVector& z, const MultiIndex& alpha, const MultiIndex& beta);

}  // namespace acx
