#include "acx/experiments.hpp"

#include <cmath>

#include "acx/cauchy.hpp"
#include "acx/errors.hpp"
#include "acx/rng.hpp"

namespace acx {

PullbackReport pullback_subsolution(const ScalarField& field, const DiscGrid& disc) {
  PullbackReport out;
  out.composed = DiscGrid(disc.nr(), disc.ntheta(), 1);
  for (int j = 0; j < disc.nr(); ++j)
    for (int k = 0; k < disc.ntheta(); ++k)
      out.composed.value(j, k, 0) = field.eval(disc.value_vector(j, k));

  DiscGrid dz = dzeta_grid(disc);
  DiscGrid dzb = dbar_grid(disc);
  double c1 = 0.0;
  for (int j = 0; j < disc.nr(); ++j) {
    if (!disc.is_interior(j)) continue;
    for (int k = 0; k < disc.ntheta(); ++k) {
      double local = disc.value_vector(j, k).norm() + dz.value_vector(j, k).norm() +
                     dzb.value_vector(j, k).norm();
      c1 = std::max(c1, local);
    }
  }
  out.c1_norm = c1;

  DiscGrid composed_dbar = dbar_grid(out.composed);
  for (int j = 0; j < disc.nr(); ++j) {
    if (!disc.is_interior(j)) continue;
    for (int k = 0; k < disc.ntheta(); ++k)
      out.sup_dbar = std::max(out.sup_dbar, std::abs(composed_dbar.value(j, k, 0)));
  }
  out.bound = field.dbar_bound * c1 * 1.1;
  // Allowance for the discrete-dbar floor of the harness itself, scaled by
  // the disc's C^1 size; reported through `bound` being the analytic part.
  double floor_allowance = 1e-5 * std::max(1.0, c1);
  out.certified = out.sup_dbar <= out.bound + floor_allowance;
  return out;
}

LimitVerdict admissible_limit_experiment(const ScalarField& field, const ApproachRegion& region,
                                         const ExperimentOptions& opts) {
  auto pts = sample_approach(region, opts.seed, opts.schedule);

  std::vector<double> scales;
  std::vector<std::vector<Complex>> samples;
  for (int k = opts.schedule.k_min; k <= opts.schedule.k_max; ++k)
    scales.push_back(std::pow(2.0, -k));
  for (const auto& scale_pts : pts) {
    std::vector<Complex> row;
    row.reserve(scale_pts.size());
    for (const auto& q : scale_pts) row.push_back(field.eval(q));
    samples.push_back(std::move(row));
  }
  LimitEstimate region_est = limit_verdict(samples, scales, opts.tolerance, opts.window);

  LimitVerdict out;
  out.status = region_est.status;
  out.value = region_est.value;
  out.tail_oscillation = region_est.tail_oscillation;
  out.table = region_est.table;

  // Designated admissible p-curve: the non-tangential ray inside the
  // transverse disc, tau(delta) = p + delta * inward normal. Its tangent is
  // the normal itself, so the transversality floor holds by construction;
  // the check stays to guard exotic defining functions.
  const CVector& nu = region.inward_normal();
  CVector grad = region.defining().grad(region.base());
  double normal_component = 0.0, gn = 0.0, nn = 0.0;
  for (int i = 0; i < grad.size(); ++i) {
    normal_component += grad[i].real() * nu[i].real() + grad[i].imag() * nu[i].imag();
    gn += std::norm(grad[i]);
    nn += std::norm(nu[i]);
  }
  if (std::abs(normal_component) / std::sqrt(gn * nn) >= opts.transversality) {
    std::vector<std::vector<Complex>> curve_samples;
    for (double d : scales) {
      std::vector<Complex> row;
      for (double u : {0.8, 1.0, 1.25}) row.push_back(field.eval(region.base() + (u * d) * nu));
      curve_samples.push_back(std::move(row));
    }
    out.curve = limit_verdict(curve_samples, scales, opts.tolerance, opts.window);
    if (out.curve->status == LimitStatus::Limit) {
      // A limit along the curve must force the region limit.
      out.curve_agrees = out.status == LimitStatus::Limit &&
                         std::abs(out.curve->value - out.value) < opts.tolerance;
    }
  }
  return out;
}

FatouScan fatou_scan(const ScalarField& field, const AlmostComplexChart& chart,
                     const std::vector<CVector>& edge_points, double alpha,
                     const ExperimentOptions& opts) {
  FatouScan scan;
  int n = chart.dimension();
  uint64_t point_index = 0;
  for (const auto& p : edge_points) {
    DefiningFunction rho = model_defining(n);
    rho.base_point = p;
    ApproachRegion region(RegionKind::Admissible, alpha, rho, chart, DeltaMode::AbsRho);
    ExperimentOptions local = opts;
    local.seed = Rng(opts.seed).split(point_index).next_u64();
    LimitVerdict v = admissible_limit_experiment(field, region, local);
    scan.results.push_back({p, v.status, v.value, v.tail_oscillation, v.table});
    if (v.status == LimitStatus::Limit)
      scan.limits++;
    else if (v.status == LimitStatus::NoLimit)
      scan.no_limits++;
    else
      scan.inconclusive++;
    ++point_index;
  }
  if (!scan.results.empty())
    scan.existence_fraction = double(scan.limits) / double(scan.results.size());
  return scan;
}

std::vector<CVector> model_edge_grid(int n, int count_tangent, int count_normal,
                                     double tangent_halfwidth, double normal_lo,
                                     double normal_hi) {
  std::vector<CVector> out;
  for (int i = 0; i < count_tangent; ++i) {
    double t = count_tangent == 1
                   ? 0.0
                   : -tangent_halfwidth + 2.0 * tangent_halfwidth * i / (count_tangent - 1);
    for (int j = 0; j < count_normal; ++j) {
      double x = count_normal == 1 ? normal_lo
                                   : normal_lo + (normal_hi - normal_lo) * j / (count_normal - 1);
      CVector p = CVector::Zero(n);
      p[0] = t;
      p[n - 1] = Complex(x, -t * t);
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace acx
