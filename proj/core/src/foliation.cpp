#include "acx/foliation.hpp"

#include <Eigen/SVD>

#include "acx/errors.hpp"

namespace acx {

CVector SubmanifoldParametrization::tangent_at(const RVector& u, int i) const {
  if (tangent) return tangent(u, i);
  RVector up = u, um = u;
  up[i] += fd_step;
  um[i] -= fd_step;
  return (psi(up) - psi(um)) / (2.0 * fd_step);
}

FoliationResult foliate_generic(const SubmanifoldParametrization& param,
                                const AlmostComplexChart& chart, int d, int slice_count,
                                double param_box, int samples_per_slice, double threshold) {
  if (d <= 0 || d >= param.intrinsic)
    throw SpecError("codimension d must satisfy 0 < d < n + d", "d");
  const int slice_dim = param.intrinsic - d;  // = n for generic submanifolds
  const int n = param.ambient_n;

  FoliationResult out;
  out.threshold = threshold;

  // Slices sweep the first transverse parameter; remaining s-components 0.
  for (int si = 0; si < slice_count; ++si) {
    double sval =
        slice_count == 1 ? 0.0 : -param_box + 2.0 * param_box * si / (slice_count - 1);
    SliceCertificate cert;
    cert.s = RVector::Zero(d);
    cert.s[0] = sval;
    cert.min_singular = std::numeric_limits<double>::infinity();

    // Deterministic sample sweep of the slice parameters.
    for (int t = 0; t < samples_per_slice; ++t) {
      RVector u = RVector::Zero(param.intrinsic);
      for (int i = 0; i < slice_dim; ++i) {
        double phase = double(t) + 0.37 * i;
        u[i] = param_box * 0.8 * std::sin(1.7 * phase + 0.3);
      }
      for (int i = 0; i < d; ++i) u[slice_dim + i] = cert.s[i];

      CVector p = param.psi(u);
      RMatrix j = j_matrix(chart, p);
      RMatrix m(2 * n, 2 * slice_dim);
      for (int i = 0; i < slice_dim; ++i) {
        RVector b = realify(param.tangent_at(u, i));
        m.col(i) = b;
        m.col(slice_dim + i) = j * b;
      }
      Eigen::JacobiSVD<RMatrix> svd(m);
      double sigma = svd.singularValues().minCoeff();
      if (sigma < threshold) throw TotallyRealFailure(p, sigma);
      cert.min_singular = std::min(cert.min_singular, sigma);
      cert.samples++;
    }
    out.slices.push_back(std::move(cert));
  }
  return out;
}

}  // namespace acx
