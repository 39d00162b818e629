#pragma once

#include "acx/chart.hpp"
#include "acx/normalize.hpp"
#include "acx/transform.hpp"

namespace acx {

/// Homogeneous limit data: dimension n and the (n-1) x (n-1) coefficient
/// array of the linear functions l_j(conj 'w) = sum_m mu[j][m] conj(w_m)
/// sitting in the last row of A_0 (with the leading minus of the matrix
/// display):
///   A_0(w)[n-1][j] = -l_j(conj 'w),  all other entries zero.
/// A_0 is invariant under the nonisotropic dilations.
struct ModelStructure {
  int n = 2;
  CMatrix mu;  // (n-1) x (n-1)

  Complex l(int j, const CVector& wbar_prime) const {
    Complex s = 0.0;
    for (int m = 0; m + 1 < n; ++m) s += mu(j, m) * wbar_prime[m];
    return s;
  }
};

enum class DilationMode { Isotropic, Nonisotropic };

/// Chart of A_0 with analytic derivatives attached. Throws NormTooLarge if
/// the requested radius makes |A_0| reach 1 on the ball.
AlmostComplexChart model_chart(const ModelStructure& model, double radius);

/// Extracts the homogeneous model of a normalized chart (n >= 2):
///   mu[j][m] = -dA_{n-1,j}/dzbar_m(0)   (0-based row n-1),
/// the sign matching the leading minus of the A_0 display, so that the
/// induced A_0 is the uniform-on-compacts limit of the nonisotropic
/// dilations of the chart.
ModelStructure model_limit(const AlmostComplexChart& chart);

/// Pushforward under h_lambda (isotropic) or d_lambda (nonisotropic);
/// chart radius rescales by 1/lambda (isotropic) or 1/lambda at least
/// (nonisotropic uses the conservative tangential factor).
AlmostComplexChart dilate_chart(const AlmostComplexChart& chart, double lambda,
                                DilationMode mode);

/// Dimension-2 flattening: the shear (w1, w2) -> (w1, w2 + s * c * conj(w1)^2 / 2)
/// that takes A_0 to 0. The sign s is resolved empirically: both candidates
/// are pushed forward and the one with vanishing norm on a sample grid wins.
ChartTransformation dim2_flatten(const ModelStructure& model);

/// sup over a deterministic sample cloud of |A_lambda - A_0| (used by the
/// dilation-convergence studies).
double model_convergence_gap(const AlmostComplexChart& normalized_chart,
                             const ModelStructure& model, double lambda,
                             double compact_radius, int samples = 64, uint64_t seed = 11);

}  // namespace acx
