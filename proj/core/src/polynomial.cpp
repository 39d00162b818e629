#include "acx/polynomial.hpp"

#include <cmath>
#include <numeric>

#include "acx/errors.hpp"

namespace acx {

Complex eval_monomial(const CVector& z, const MultiIndex& alpha, const MultiIndex& beta) {
  Complex v{1.0, 0.0};
  for (size_t m = 0; m < alpha.size(); ++m) {
    for (int p = 0; p < alpha[m]; ++p) v *= z[m];
    for (int p = 0; p < beta[m]; ++p) v *= std::conj(z[m]);
  }
  return v;
}

static int term_degree(const PolyTerm& t) {
  return std::accumulate(t.alpha.begin(), t.alpha.end(), 0) +
         std::accumulate(t.beta.begin(), t.beta.end(), 0);
}

void PolyMatrix::add_term(int row, int col, MultiIndex alpha, MultiIndex beta, Complex c) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
    throw SpecError("polynomial term index out of range", "entries");
  if ((int)alpha.size() != dim_ || (int)beta.size() != dim_)
    throw SpecError("multi-index length does not match dimension", "alpha/beta");
  terms_.push_back({row, col, std::move(alpha), std::move(beta), c});
}

CMatrix PolyMatrix::eval(const CVector& z) const {
  CMatrix out = CMatrix::Zero(rows_, cols_);
  for (const auto& t : terms_) out(t.row, t.col) += t.coeff * eval_monomial(z, t.alpha, t.beta);
  return out;
}

PolyMatrix PolyMatrix::dz(int m) const {
  PolyMatrix out(rows_, cols_, dim_);
  for (const auto& t : terms_) {
    if (t.alpha[m] == 0) continue;
    PolyTerm d = t;
    d.coeff *= double(d.alpha[m]);
    d.alpha[m] -= 1;
    out.add_term(d);
  }
  return out;
}

PolyMatrix PolyMatrix::dzbar(int m) const {
  PolyMatrix out(rows_, cols_, dim_);
  for (const auto& t : terms_) {
    if (t.beta[m] == 0) continue;
    PolyTerm d = t;
    d.coeff *= double(d.beta[m]);
    d.beta[m] -= 1;
    out.add_term(d);
  }
  return out;
}

int PolyMatrix::degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, term_degree(t));
  return d;
}

double PolyMatrix::coeff_bound(double r) const {
  RMatrix rowsum = RMatrix::Zero(rows_, cols_);
  for (const auto& t : terms_)
    rowsum(t.row, t.col) += std::abs(t.coeff) * std::pow(r, term_degree(t));
  double best = 0.0;
  for (int i = 0; i < rows_; ++i) best = std::max(best, rowsum.row(i).sum());
  return best;
}

void PolyMap::add_term(int comp, MultiIndex alpha, MultiIndex beta, Complex c) {
  if (comp < 0 || comp >= ncomp_)
    throw SpecError("polynomial map component out of range", "comp");
  if ((int)alpha.size() != dim_ || (int)beta.size() != dim_)
    throw SpecError("multi-index length does not match dimension", "alpha/beta");
  terms_.push_back({comp, 0, std::move(alpha), std::move(beta), c});
}

CVector PolyMap::eval(const CVector& z) const {
  CVector out = CVector::Zero(ncomp_);
  for (const auto& t : terms_) out[t.row] += t.coeff * eval_monomial(z, t.alpha, t.beta);
  return out;
}

CMatrix PolyMap::jacobian_z(const CVector& z) const {
  CMatrix out = CMatrix::Zero(ncomp_, dim_);
  for (const auto& t : terms_) {
    for (int m = 0; m < dim_; ++m) {
      if (t.alpha[m] == 0) continue;
      MultiIndex a = t.alpha;
      a[m] -= 1;
      out(t.row, m) += t.coeff * double(t.alpha[m]) * eval_monomial(z, a, t.beta);
    }
  }
  return out;
}

CMatrix PolyMap::jacobian_zbar(const CVector& z) const {
  CMatrix out = CMatrix::Zero(ncomp_, dim_);
  for (const auto& t : terms_) {
    for (int m = 0; m < dim_; ++m) {
      if (t.beta[m] == 0) continue;
      MultiIndex b = t.beta;
      b[m] -= 1;
      out(t.row, m) += t.coeff * double(t.beta[m]) * eval_monomial(z, t.alpha, b);
    }
  }
  return out;
}

void PolyMap::linear_part(CMatrix& b, CMatrix& c, CVector& constant) const {
  b = CMatrix::Zero(ncomp_, dim_);
  c = CMatrix::Zero(ncomp_, dim_);
  constant = CVector::Zero(ncomp_);
  for (const auto& t : terms_) {
    int d = term_degree(t);
    if (d == 0) {
      constant[t.row] += t.coeff;
    } else if (d == 1) {
      for (int m = 0; m < dim_; ++m) {
        if (t.alpha[m] == 1) b(t.row, m) += t.coeff;
        if (t.beta[m] == 1) c(t.row, m) += t.coeff;
      }
    }
  }
}

int PolyMap::degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, term_degree(t));
  return d;
}

PolyMap PolyMap::identity(int dim) {
  PolyMap out(dim, dim);
  for (int i = 0; i < dim; ++i) {
    MultiIndex a(dim, 0), b(dim, 0);
    a[i] = 1;
    out.add_term(i, a, b, 1.0);
  }
  return out;
}

}  // namespace acx
