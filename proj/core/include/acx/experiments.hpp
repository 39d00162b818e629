#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "acx/disc_limits.hpp"
#include "acx/disc_solver.hpp"
#include "acx/fields.hpp"
#include "acx/regions.hpp"

namespace acx {

struct PullbackReport {
  DiscGrid composed;          // F o h on the parameter grid
  double sup_dbar = 0.0;      // sup-node |dbar(F o h)|
  double bound = 0.0;         // declared dbar_J bound * C^1 norm of h * 1.1
  bool certified = false;
  double c1_norm = 0.0;
};

/// Composes a field with a disc (given on a grid) and certifies the pullback
/// subsolution bound sup |dbar(F o h)| <= ||dbar_J F|| * ||h||_{C^1} * 1.1.
PullbackReport pullback_subsolution(const ScalarField& field, const DiscGrid& disc);

struct ExperimentOptions {
  ApproachSchedule schedule;
  double tolerance = 5e-3;
  int window = 3;
  uint64_t seed = 1;
  /// Transversality floor for the admissible curve (normal component of the
  /// curve tangent at p, relative to its norm).
  double transversality = 0.1;
};

struct LimitVerdict {
  LimitStatus status = LimitStatus::Inconclusive;
  Complex value{0, 0};
  double tail_oscillation = 0.0;
  std::vector<ConvergenceRow> table;
  // The designated admissible p-curve cross-check (inside the transverse disc).
  std::optional<LimitEstimate> curve;
  bool curve_agrees = true;
};

/// Region limit experiment with the admissible p-curve cross-check: samples
/// the region along the schedule, runs the Cauchy/oscillation test, and
/// compares with the limit along the curve t -> p + delta(t) * inward normal
/// (the curve lives inside the transverse disc of the model).
LimitVerdict admissible_limit_experiment(const ScalarField& field, const ApproachRegion& region,
                                         const ExperimentOptions& opts = {});

struct FatouPointResult {
  CVector point;
  LimitStatus status;
  Complex value;
  double tail_oscillation;
  std::vector<ConvergenceRow> table;  // per-scale oscillation rows
};

struct FatouScan {
  std::vector<FatouPointResult> results;
  double existence_fraction = 0.0;
  int limits = 0, no_limits = 0, inconclusive = 0;
};

/// Runs the limit experiment at every point of an edge grid on the model
/// boundary and reports the fraction with a limit verdict.
FatouScan fatou_scan(const ScalarField& field, const AlmostComplexChart& chart,
                     const std::vector<CVector>& edge_points, double alpha,
                     const ExperimentOptions& opts = {});

/// Edge grid on the model boundary: points (x1, x2 - i x1^2)-style with
/// 'z real (first coordinate swept), Re z_n swept, rho = 0.
std::vector<CVector> model_edge_grid(int n, int count_tangent, int count_normal,
                                     double tangent_halfwidth, double normal_lo,
                                     double normal_hi);

}  // namespace acx
