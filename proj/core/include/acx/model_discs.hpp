#pragma once

#include <functional>
#include <vector>

#include "acx/disc_solver.hpp"
#include "acx/model.hpp"

namespace acx {

/// Parameters of one disc of the filling family:
///   'z = v zeta,  z_n = z_n0 + c conj(zeta)^2 + conj(c) zeta^2,
/// anchored at ('0, z_n0) with Im z_n0 < 0. Im z_n stays equal to Im z_n0
/// along the whole disc.
struct DiscFamilyParams {
  CVector v;          // unit tangent in H_0 (length n-1)
  Complex anchor;     // z_n0
  Complex c;          // quadratic coefficient, matched to the model equation
  double radius = 0;  // parameter radius ~ sqrt(|Im z_n0|)
};

struct FamilyDisc {
  DiscFamilyParams params;
  std::function<CVector(Complex)> eval;  // zeta in the disc of params.radius
};

/// Closed-form family disc. The coefficient comes from matching the last
/// model equation: c = -(1/2) sum_j conj(v_j) l_j(conj v). The aperture
/// only sets the parameter radius sqrt(alpha |Im z_n0|).
FamilyDisc model_disc_family(const ModelStructure& model, const CVector& v, Complex anchor,
                             double alpha = 1.0);

/// The transverse disc through the base point: zeta -> ('0, zeta) on the
/// lower half plane, reparametrized from the unit disc by a Moebius map with
/// the given truncation scale.
struct TransverseDisc {
  std::function<CVector(Complex)> eval_halfplane;  // Im zeta < 0 directly
  std::function<CVector(Complex)> eval_disc;       // unit-disc parametrization
  double truncation = 4.0;
};
TransverseDisc transverse_normal_disc(const ModelStructure& model, double truncation = 4.0);

struct FillFamily {
  std::vector<FamilyDisc> discs;
  Complex anchor;
  double alpha = 0;
};

/// K family discs in deterministic tangent directions through the anchor,
/// with radii matched to the admissible aperture. The anchor must satisfy
/// the cone condition |z_n0| < (1 + alpha) |Im z_n0|.
FillFamily fill_admissible(const ModelStructure& model, double alpha, Complex anchor,
                           int directions, uint64_t seed = 5);

/// The family disc through a given interior point q of the model domain
/// (coverage construction: v along 'q, anchor height Im q_n).
FamilyDisc covering_disc(const ModelStructure& model, const CVector& q, double alpha);

}  // namespace acx
