#include "acx/model_discs.hpp"

#include "acx/errors.hpp"
#include "acx/rng.hpp"

namespace acx {

FamilyDisc model_disc_family(const ModelStructure& model, const CVector& v, Complex anchor,
                             double alpha) {
  const int n = model.n;
  if (v.size() != n - 1) throw SpecError("tangent vector must lie in C^{n-1}", "v");
  if (std::abs(v.norm() - 1.0) > 1e-9) throw SpecError("tangent vector must be unit", "v");
  if (anchor.imag() >= 0.0) throw SpecError("anchor needs Im z_n0 < 0", "anchor");

  CVector vbar = v.conjugate();
  Complex c{0.0, 0.0};
  for (int j = 0; j + 1 < n; ++j) c += vbar[j] * model.l(j, vbar);
  c *= -0.5;

  FamilyDisc out;
  out.params.v = v;
  out.params.anchor = anchor;
  out.params.c = c;
  out.params.radius = std::sqrt(alpha * std::abs(anchor.imag()));
  Complex cbar = std::conj(c);
  out.eval = [n, v, anchor, c, cbar](Complex zeta) {
    CVector z(n);
    for (int j = 0; j + 1 < n; ++j) z[j] = v[j] * zeta;
    Complex zb = std::conj(zeta);
    z[n - 1] = anchor + c * zb * zb + cbar * zeta * zeta;
    return z;
  };
  return out;
}

TransverseDisc transverse_normal_disc(const ModelStructure& model, double truncation) {
  const int n = model.n;
  TransverseDisc out;
  out.truncation = truncation;
  out.eval_halfplane = [n](Complex zeta) {
    CVector z = CVector::Zero(n);
    z[n - 1] = zeta;
    return z;
  };
  double t = truncation;
  out.eval_disc = [n, t](Complex w) {
    // Moebius D -> lower half plane, 0 -> -i t.
    Complex zeta = -Complex(0, 1) * t * (1.0 - w) / (1.0 + w);
    CVector z = CVector::Zero(n);
    z[n - 1] = zeta;
    return z;
  };
  return out;
}

FillFamily fill_admissible(const ModelStructure& model, double alpha, Complex anchor,
                           int directions, uint64_t seed) {
  if (anchor.imag() >= 0.0) throw SpecError("anchor needs Im z_n0 < 0", "anchor");
  if (std::abs(anchor) >= (1.0 + alpha) * std::abs(anchor.imag()))
    throw DomainError("anchor outside the cone |z_n| < (1+alpha)|Im z_n|");
  FillFamily out;
  out.anchor = anchor;
  out.alpha = alpha;
  Rng rng(seed);
  for (int k = 0; k < directions; ++k) {
    CVector v = rng.next_unit_vector(model.n - 1);
    out.discs.push_back(model_disc_family(model, v, anchor, alpha));
  }
  return out;
}

FamilyDisc covering_disc(const ModelStructure& model, const CVector& q, double alpha) {
  const int n = model.n;
  CVector qt = q.head(n - 1);
  double rho = q[n - 1].imag();
  for (int j = 0; j + 1 < n; ++j) rho += std::norm(q[j]);
  if (rho >= 0.0) throw DomainError("point is not inside the model domain");

  double s = qt.norm();
  CVector v;
  if (s < 1e-14) {
    v = CVector::Zero(n - 1);
    v[0] = 1.0;
    s = 0.0;
  } else {
    v = qt / s;
  }
  // Anchor height matches the point; the real part absorbs the quadratic
  // term so the disc passes through q exactly at zeta = s.
  CVector vbar = v.conjugate();
  Complex c{0.0, 0.0};
  for (int j = 0; j + 1 < n; ++j) c += vbar[j] * model.l(j, vbar);
  c *= -0.5;
  Complex corr = c * s * s + std::conj(c) * s * s;
  Complex anchor = Complex(q[n - 1].real() - corr.real(), q[n - 1].imag());
  FamilyDisc disc = model_disc_family(model, v, anchor, alpha);
  return disc;
}

}  // namespace acx
