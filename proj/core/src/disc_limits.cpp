#include "acx/disc_limits.hpp"

#include <cmath>

#include "acx/cauchy.hpp"
#include "acx/errors.hpp"
#include "acx/rng.hpp"

namespace acx {

LimitEstimate limit_verdict(const std::vector<std::vector<Complex>>& samples_by_scale,
                            const std::vector<double>& scales, double tol, int window) {
  LimitEstimate out;
  int ns = int(scales.size());
  if (ns == 0) return out;
  window = std::max(window, 3);

  // Pooled oscillation of scales [k, ns): max pairwise spread. Computed
  // backwards so each row reports the tail behaviour from that scale on.
  std::vector<double> pooled(ns, 0.0);
  std::vector<Complex> tail_pool;
  for (int k = ns - 1; k >= 0; --k) {
    for (const auto& v : samples_by_scale[k]) tail_pool.push_back(v);
    double worst = 0.0;
    for (size_t i = 0; i < tail_pool.size(); ++i)
      for (size_t j = i + 1; j < tail_pool.size(); ++j)
        worst = std::max(worst, std::abs(tail_pool[i] - tail_pool[j]));
    pooled[k] = worst;
  }

  out.table.resize(ns);
  for (int k = 0; k < ns; ++k) {
    out.table[k].scale = scales[k];
    out.table[k].oscillation = pooled[k];
    Complex mean{0, 0};
    if (!samples_by_scale[k].empty()) {
      for (const auto& v : samples_by_scale[k]) mean += v;
      mean /= double(samples_by_scale[k].size());
    }
    out.table[k].mean = mean;
  }

  int kw = ns - window;
  if (kw < 0) kw = 0;
  out.tail_oscillation = pooled[kw];
  if (pooled[kw] < tol) {
    out.status = LimitStatus::Limit;
    out.value = out.table[ns - 1].mean;
  } else {
    // Diverging oscillation -> no limit; a plateau above tolerance that is
    // still shrinking is reported as inconclusive.
    double early = pooled[std::max(0, ns - 2 * window)];
    out.status = (pooled[kw] > 0.5 * early) ? LimitStatus::NoLimit : LimitStatus::Inconclusive;
    out.value = out.table[ns - 1].mean;
  }
  return out;
}

LimitEstimate nontangential_limit_estimate(const std::function<Complex(Complex)>& f,
                                           double theta0, const StolzSchedule& schedule) {
  if (schedule.aperture <= 1.0)
    throw SpecError("Stolz aperture must exceed 1", "aperture");
  const Complex e0 = std::polar(1.0, theta0);
  std::vector<double> scales;
  std::vector<std::vector<Complex>> samples;
  double spread = std::sqrt(schedule.aperture * schedule.aperture - 1.0);
  for (int k = schedule.k_min; k <= schedule.k_max; ++k) {
    double d = std::pow(2.0, -k);
    std::vector<Complex> row;
    for (int i = 0; i < schedule.fan; ++i) {
      double t = schedule.fan == 1 ? 0.0 : -0.8 + 1.6 * i / (schedule.fan - 1);
      // Points at height d, swept across the Stolz region; membership is
      // enforced explicitly, the sweep parameter only suggests a direction.
      double phi = t * 0.9 * d * spread;
      Complex zeta = (1.0 - d) * std::polar(1.0, theta0 + phi);
      if (std::abs(zeta - e0) < schedule.aperture * (1.0 - std::abs(zeta)))
        row.push_back(f(zeta));
    }
    if (row.empty()) row.push_back(f((1.0 - d) * e0));
    scales.push_back(d);
    samples.push_back(std::move(row));
  }
  return limit_verdict(samples, scales, schedule.tolerance, schedule.window);
}

LimitEstimate nontangential_limit_estimate(const DiscGrid& f, int comp, double theta0,
                                           const StolzSchedule& schedule) {
  auto eval = [&](Complex z) { return f.interpolate(z)[comp]; };
  StolzSchedule s = schedule;
  // Grid resolution caps the usable depth.
  double rmax = f.r(f.nr() - 1);
  int k_cap = int(std::floor(-std::log2(1.0 - rmax)));
  s.k_max = std::min(s.k_max, k_cap);
  return nontangential_limit_estimate(eval, theta0, s);
}

HolderEstimate holder_check(const std::function<Complex(Complex)>& f, const DiscGrid& f_grid,
                            double p, double r, int pairs, uint64_t seed) {
  if (p <= 2.0) throw SpecError("Holder exponent needs p > 2", "p");
  if (r >= 1.0) throw SpecError("interior radius must satisfy r < 1", "r");
  HolderEstimate out;
  out.sup_norm = f_grid.sup_norm();
  out.lp_dbar = dbar_grid(f_grid).lp_norm(p);
  double denom_norms = out.sup_norm + out.lp_dbar;
  double expo = 1.0 - 2.0 / p;
  Rng rng(seed);
  for (int i = 0; i < pairs; ++i) {
    Complex a = std::polar(r * std::sqrt(rng.next_double()), rng.uniform(0, 2 * M_PI));
    Complex b = std::polar(r * std::sqrt(rng.next_double()), rng.uniform(0, 2 * M_PI));
    double dist = std::abs(a - b);
    if (dist < 1e-9) continue;
    double ratio = std::abs(f(a) - f(b)) / (denom_norms * std::pow(dist, expo));
    if (ratio > out.c_hat) {
      out.c_hat = ratio;
      out.pair_a = a;
      out.pair_b = b;
    }
  }
  return out;
}

double relative_l2_interior(const DiscGrid& a, const DiscGrid& b) {
  double num = 0.0, den = 0.0;
  for (int j = 0; j < a.nr(); ++j) {
    if (!a.is_interior(j)) continue;
    double w = a.cell_area(j);
    for (int k = 0; k < a.ntheta(); ++k) {
      num += w * (a.value_vector(j, k) - b.value_vector(j, k)).squaredNorm();
      den += w * b.value_vector(j, k).squaredNorm();
    }
  }
  return den > 0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace acx
