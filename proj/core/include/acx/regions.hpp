#pragma once

#include <optional>
#include <vector>

#include "acx/chart.hpp"
#include "acx/defining.hpp"
#include "acx/types.hpp"

namespace acx {

enum class RegionKind { Cone, Admissible };
enum class DeltaMode { AbsRho, MinDistance };

/// Non-tangential cone C_alpha(p) (dist(q,p) < alpha delta_p(q), alpha > 1)
/// or admissible region A_alpha(p) (d_p(q) < (1+alpha) delta_p(q) and
/// dist(p,q)^2 < alpha delta_p(q), alpha > 0) at a boundary base point.
/// delta_p is min(distance to T_p, distance to the boundary); models use the
/// |rho| proxy. d_p is the distance to the affine holomorphic tangent plane
/// p + H_p, H_p = T_p intersect J(p) T_p.
class ApproachRegion {
 public:
  ApproachRegion(RegionKind kind, double alpha, DefiningFunction rho,
                 const AlmostComplexChart& chart, DeltaMode mode = DeltaMode::AbsRho);

  RegionKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  const CVector& base() const { return rho_.base_point; }
  const DefiningFunction& defining() const { return rho_; }
  DeltaMode delta_mode() const { return mode_; }

  struct Distances {
    double delta = 0.0;  // delta_p(q)
    double d = 0.0;      // d_p(q)
    double dist = 0.0;   // dist(p, q)
  };
  /// Throws DomainError unless rho(q) < 0.
  Distances distances(const CVector& q) const;

  struct Membership {
    bool inside = false;
    double slack_primary = 0.0;    // cone/admissible first inequality slack
    double slack_secondary = 0.0;  // admissible second inequality slack
    Distances distances;
  };
  Membership membership(const CVector& q) const;
  bool contains(const CVector& q) const { return membership(q).inside; }

  /// Inward unit normal at p (complex representation of -grad rho / |grad|).
  const CVector& inward_normal() const { return inward_; }
  /// Real-orthonormal basis of H_p (n-1 complex directions and their
  /// J-rotations are implicit; returned as 2n-2 real directions).
  const std::vector<CVector>& tangent_basis() const { return h_basis_; }
  /// The "complex normal" tangential direction J nu.
  const CVector& j_normal() const { return j_normal_; }

 private:
  RegionKind kind_;
  double alpha_;
  DefiningFunction rho_;
  DeltaMode mode_;
  CVector grad_p_, inward_, j_normal_;
  RMatrix normals_;               // orthonormal {grad, J^T grad} pair
  std::vector<CVector> h_basis_;  // orthonormal real basis of H_p
};

struct ApproachSchedule {
  int k_min = 3, k_max = 22;  // delta = 2^{-k}
  int per_scale = 6;
  int max_attempts = 400;
};

/// Deterministic sampler realizing the limit along the region: per scale
/// 2^{-k}, points with delta_p comparable to the scale, spread across the
/// admissible/cone widths. Throws EmptyShell when rejection fails at a scale.
std::vector<std::vector<CVector>> sample_approach(const ApproachRegion& region, uint64_t seed,
                                                  const ApproachSchedule& schedule);

}  // namespace acx
