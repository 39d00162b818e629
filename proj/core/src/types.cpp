#include "acx/types.hpp"

#include <Eigen/SVD>

namespace acx {

double spectral_norm(const CMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

RVector realify(const CVector& v) {
  RVector out(2 * v.size());
  for (int i = 0; i < v.size(); ++i) {
    out[2 * i] = v[i].real();
    out[2 * i + 1] = v[i].imag();
  }
  return out;
}

CVector complexify(const RVector& v) {
  CVector out(v.size() / 2);
  for (int i = 0; i < out.size(); ++i) out[i] = Complex(v[2 * i], v[2 * i + 1]);
  return out;
}

RMatrix realify_antilinear(const CMatrix& m) {
  // Entry a acting on conj(w): a * conj(w) has real block [[re a, im a], [im a, -re a]].
  RMatrix out(2 * m.rows(), 2 * m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      double p = m(i, j).real(), q = m(i, j).imag();
      out(2 * i, 2 * j) = p;
      out(2 * i, 2 * j + 1) = q;
      out(2 * i + 1, 2 * j) = q;
      out(2 * i + 1, 2 * j + 1) = -p;
    }
  }
  return out;
}

RMatrix realify_linear(const CMatrix& m) {
  RMatrix out(2 * m.rows(), 2 * m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      double p = m(i, j).real(), q = m(i, j).imag();
      out(2 * i, 2 * j) = p;
      out(2 * i, 2 * j + 1) = -q;
      out(2 * i + 1, 2 * j) = q;
      out(2 * i + 1, 2 * j + 1) = p;
    }
  }
  return out;
}

RMatrix jst_matrix(int n) {
  RMatrix out = RMatrix::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    out(2 * i, 2 * i + 1) = -1.0;
    out(2 * i + 1, 2 * i) = 1.0;
  }
  return out;
}

}  // namespace acx
