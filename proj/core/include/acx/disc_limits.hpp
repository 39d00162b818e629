#pragma once

#include <functional>
#include <vector>

#include "acx/grid.hpp"
#include "acx/types.hpp"

namespace acx {

enum class LimitStatus { Limit, NoLimit, Inconclusive };

struct ConvergenceRow {
  double scale = 0.0;        // 1 - |zeta| (or delta on a domain)
  double oscillation = 0.0;  // max pairwise spread of the samples at and
                             // below this scale, over the tail window
  Complex mean{0.0, 0.0};
};

struct LimitEstimate {
  LimitStatus status = LimitStatus::Inconclusive;
  Complex value{0.0, 0.0};
  double tail_oscillation = 0.0;
  std::vector<ConvergenceRow> table;
};

/// Shared Cauchy-criterion verdict over per-scale sample pools: the limit is
/// accepted when the pooled oscillation of the last `window` scales stays
/// under `tol` (window >= 3 consecutive scales).
LimitEstimate limit_verdict(const std::vector<std::vector<Complex>>& samples_by_scale,
                            const std::vector<double>& scales, double tol, int window = 3);

struct StolzSchedule {
  double aperture = 2.0;         // alpha > 1
  int k_min = 3, k_max = 16;     // scales 1 - |zeta| = 2^{-k}
  int fan = 5;                   // samples per scale across the region
  double tolerance = 5e-3;
  int window = 3;
};

/// Limit of f over the Stolz-type region |zeta - e^{i theta0}| < alpha (1 - |zeta|).
/// Rejects aperture <= 1 (the region degenerates).
LimitEstimate nontangential_limit_estimate(const std::function<Complex(Complex)>& f,
                                           double theta0, const StolzSchedule& schedule);

/// Grid-backed variant (bilinear interpolation between nodes).
LimitEstimate nontangential_limit_estimate(const DiscGrid& f, int comp, double theta0,
                                           const StolzSchedule& schedule);

struct HolderEstimate {
  double c_hat = 0.0;       // empirical constant of the interior estimate
  Complex pair_a{0, 0}, pair_b{0, 0};
  double sup_norm = 0.0;    // ||f||_inf over the grid
  double lp_dbar = 0.0;     // ||f_zbar||_{L^p}
};

/// Empirical constant of |f(a) - f(b)| <= C (||f||_inf + ||f_zbar||_p) |a-b|^{1-2/p}
/// over `pairs` random pairs in the disc of radius r.
HolderEstimate holder_check(const std::function<Complex(Complex)>& f, const DiscGrid& f_grid,
                            double p, double r, int pairs, uint64_t seed);

/// Relative L^2 error of (a - b) against b over interior nodes; test utility
/// for refinement studies.
double relative_l2_interior(const DiscGrid& a, const DiscGrid& b);

}  // namespace acx
