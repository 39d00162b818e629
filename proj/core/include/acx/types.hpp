#pragma once

#include <complex>
#include <functional>
#include <Eigen/Dense>

namespace acx {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

inline constexpr Complex kI{0.0, 1.0};

/// Largest singular value (operator 2-norm) of a complex matrix.
double spectral_norm(const CMatrix& m);

/// Real 2n-dimensional representation of a complex n-vector,
/// interleaved as (x1, y1, ..., xn, yn).
RVector realify(const CVector& v);
CVector complexify(const RVector& v);

/// Real 2n x 2n matrix of v -> M * conj(v) (a C-antilinear map).
RMatrix realify_antilinear(const CMatrix& m);

/// Real 2n x 2n matrix of v -> M * v (a C-linear map).
RMatrix realify_linear(const CMatrix& m);

/// Block-diagonal matrix of the standard complex structure on R^{2n}.
RMatrix jst_matrix(int n);

inline const char* version() { return "0.1.0"; }

}  // namespace acx
