#include "acx/regions.hpp"

#include <cmath>

#include "acx/errors.hpp"
#include "acx/rng.hpp"

namespace acx {

static double real_dot(const CVector& a, const CVector& b) {
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i)
    s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
  return s;
}

ApproachRegion::ApproachRegion(RegionKind kind, double alpha, DefiningFunction rho,
                               const AlmostComplexChart& chart, DeltaMode mode)
    : kind_(kind), alpha_(alpha), rho_(std::move(rho)), mode_(mode) {
  if (kind_ == RegionKind::Cone && alpha_ <= 1.0)
    throw SpecError("cone aperture must exceed 1", "alpha");
  if (kind_ == RegionKind::Admissible && alpha_ <= 0.0)
    throw SpecError("admissible aperture must be positive", "alpha");
  rho_.check();

  const CVector& p = rho_.base_point;
  grad_p_ = rho_.grad(p);
  double gn = std::sqrt(real_dot(grad_p_, grad_p_));
  inward_ = -grad_p_ / gn;

  RMatrix j = j_matrix(chart, p);
  RVector g = realify(grad_p_);
  RVector jg = j.transpose() * g;
  j_normal_ = complexify(RVector(j * realify(inward_)));

  // Orthonormalize {g, J^T g}; H_p is their real-orthogonal complement.
  int dim = int(g.size());
  RMatrix normals(dim, 2);
  normals.col(0) = g / g.norm();
  RVector w = jg - normals.col(0).dot(jg) * normals.col(0);
  normals.col(1) = w / w.norm();
  normals_ = normals;

  // Basis of H_p by projecting coordinate directions and Gram-Schmidt.
  std::vector<RVector> basis;
  for (int i = 0; i < dim && int(basis.size()) < dim - 2; ++i) {
    RVector e = RVector::Zero(dim);
    e[i] = 1.0;
    e -= normals.col(0).dot(e) * normals.col(0);
    e -= normals.col(1).dot(e) * normals.col(1);
    for (const auto& b : basis) e -= b.dot(e) * b;
    double nn = e.norm();
    if (nn > 1e-8) basis.push_back(e / nn);
  }
  for (const auto& b : basis) h_basis_.push_back(complexify(b));
}

ApproachRegion::Distances ApproachRegion::distances(const CVector& q) const {
  double r = rho_.rho(q);
  if (r >= 0.0) throw DomainError("point lies outside the domain (rho >= 0)");
  Distances out;
  const CVector& p = rho_.base_point;
  CVector x = q - p;
  out.dist = x.norm();

  double gn = std::sqrt(real_dot(grad_p_, grad_p_));
  double to_tangent = std::abs(real_dot(grad_p_, x)) / gn;
  if (mode_ == DeltaMode::AbsRho) {
    out.delta = std::min(to_tangent, std::abs(r));
  } else {
    out.delta = std::min(to_tangent, boundary_distance(rho_, q));
  }

  // Distance to p + H_p: norm of the projection on the two normal directions.
  RVector xr = realify(x);
  double c0 = normals_.col(0).dot(xr);
  double c1 = normals_.col(1).dot(xr);
  out.d = std::sqrt(c0 * c0 + c1 * c1);
  return out;
}

ApproachRegion::Membership ApproachRegion::membership(const CVector& q) const {
  Membership m;
  m.distances = distances(q);
  if (kind_ == RegionKind::Cone) {
    m.slack_primary = alpha_ * m.distances.delta - m.distances.dist;
    m.slack_secondary = m.slack_primary;
    m.inside = m.slack_primary > 0.0;
  } else {
    m.slack_primary = (1.0 + alpha_) * m.distances.delta - m.distances.d;
    m.slack_secondary = alpha_ * m.distances.delta - m.distances.dist * m.distances.dist;
    m.inside = m.slack_primary > 0.0 && m.slack_secondary > 0.0;
  }
  return m;
}

std::vector<std::vector<CVector>> sample_approach(const ApproachRegion& region, uint64_t seed,
                                                  const ApproachSchedule& schedule) {
  std::vector<std::vector<CVector>> out;
  Rng root(seed);
  const CVector& p = region.base();
  const auto& h_basis = region.tangent_basis();
  int scale_index = 0;
  for (int k = schedule.k_min; k <= schedule.k_max; ++k, ++scale_index) {
    double delta = std::pow(2.0, -k);
    std::vector<CVector> pts;
    for (int i = 0; i < schedule.per_scale; ++i) {
      Rng rng = root.split(uint64_t(scale_index), uint64_t(i));
      bool found = false;
      double shrink = 1.0;
      for (int attempt = 0; attempt < schedule.max_attempts; ++attempt) {
        double un = rng.uniform(0.6, 1.1);
        CVector q = p + (delta * un) * region.inward_normal();
        if (region.kind() == RegionKind::Cone) {
          double tr = shrink * rng.uniform(0.0, 0.8) * delta *
                      std::sqrt(region.alpha() * region.alpha() - 1.0);
          if (!h_basis.empty()) {
            CVector dir = CVector::Zero(p.size());
            for (const auto& b : h_basis) dir += rng.next_normal() * b;
            double dn = dir.norm();
            if (dn > 1e-12) q += (tr / dn) * dir;
          }
        } else {
          double tr = shrink * rng.uniform(0.0, 0.9) *
                      std::sqrt(region.alpha() * delta);
          if (!h_basis.empty()) {
            CVector dir = CVector::Zero(p.size());
            for (const auto& b : h_basis) dir += rng.next_normal() * b;
            double dn = dir.norm();
            if (dn > 1e-12) q += (tr / dn) * dir;
          }
          // small sweep along the complex-normal tangential direction
          q += (shrink * rng.uniform(-0.25, 0.25) * delta) * region.j_normal();
        }
        try {
          if (region.contains(q)) {
            pts.push_back(q);
            found = true;
            break;
          }
        } catch (const DomainError&) {
          // rho >= 0: retry tighter
        }
        if (attempt % 40 == 39) shrink *= 0.5;
      }
      if (!found && pts.empty() && i == schedule.per_scale - 1) throw EmptyShell(delta);
    }
    if (pts.empty()) throw EmptyShell(delta);
    out.push_back(std::move(pts));
  }
  return out;
}

}  // namespace acx
