#include "acx/model.hpp"

#include "acx/errors.hpp"

namespace acx {

AlmostComplexChart model_chart(const ModelStructure& model, double radius) {
  int n = model.n;
  if (n < 2) throw SpecError("model structures need n >= 2", "n");
  if (model.mu.rows() != n - 1 || model.mu.cols() != n - 1)
    throw SpecError("mu must be (n-1) x (n-1)", "mu");
  PolyMatrix table(n, n, n);
  for (int j = 0; j + 1 < n; ++j) {
    for (int m = 0; m + 1 < n; ++m) {
      Complex c = model.mu(j, m);
      if (c == 0.0) continue;
      MultiIndex a(n, 0), b(n, 0);
      b[m] = 1;
      table.add_term(n - 1, j, a, b, -c);
    }
  }
  AlmostComplexChart chart(table, radius);
  // |A_0(w)| = ||mu row sums|| * |'w| style bound; check the exact norm on
  // the boundary sphere via the coefficient bound.
  double bound = table.coeff_bound(radius);
  if (bound >= 1.0)
    throw NormTooLarge("model chart radius too large for mu", CVector::Zero(n), bound);
  return chart;
}

ModelStructure model_limit(const AlmostComplexChart& chart) {
  int n = chart.dimension();
  if (n < 2) throw SpecError("model limit needs n >= 2", "n");
  if (!is_normalized(chart))
    throw SpecError("model limit needs a normalized chart (A(0) = 0, A_z(0) = 0)", "chart");
  CVector zero = CVector::Zero(n);
  ModelStructure model;
  model.n = n;
  model.mu = CMatrix::Zero(n - 1, n - 1);
  for (int m = 0; m + 1 < n; ++m) {
    CMatrix d = chart.da_dzbar(zero, m);
    for (int j = 0; j + 1 < n; ++j) model.mu(j, m) = -d(n - 1, j);
  }
  return model;
}

AlmostComplexChart dilate_chart(const AlmostComplexChart& chart, double lambda,
                                DilationMode mode) {
  if (lambda <= 0) throw SpecError("dilation scale must be positive", "lambda");
  int n = chart.dimension();
  if (lambda == 1.0) return chart;
  if (mode == DilationMode::Isotropic) {
    ChartTransformation h = ChartTransformation::isotropic_dilation(n, lambda);
    return pushforward(chart, h, chart.radius() / lambda);
  }
  ChartTransformation d = ChartTransformation::nonisotropic_dilation(n, lambda);
  // The image of the ball of radius R contains the ball scaled by the
  // smaller of the two dilation factors.
  double new_radius = chart.radius() / std::max(std::sqrt(lambda), lambda);
  return pushforward(chart, d, new_radius);
}

ChartTransformation dim2_flatten(const ModelStructure& model) {
  if (model.n != 2) throw SpecError("flattening is specific to n = 2", "n");
  Complex a = model.mu(0, 0);
  if (a == 0.0) return ChartTransformation::identity(2);

  AlmostComplexChart chart = model_chart(model, 0.4 / std::max(1.0, std::abs(a)));
  auto shear = [&](double sign) {
    PolyMap map(2, 2);
    map.add_term(0, {1, 0}, {0, 0}, 1.0);
    map.add_term(1, {0, 1}, {0, 0}, 1.0);
    map.add_term(1, {0, 0}, {2, 0}, sign * a / 2.0);
    return ChartTransformation::from_poly(map);
  };

  auto samples = ball_samples(2, chart.radius() * 0.8, 24, 3);
  double best_norm = 0.0;
  ChartTransformation best;
  for (double sign : {+1.0, -1.0}) {
    ChartTransformation tf = shear(sign);
    AlmostComplexChart pushed = pushforward(chart, tf, chart.radius() * 0.5);
    double worst = 0.0;
    for (const auto& z : samples) {
      CVector w = tf.forward(z);
      worst = std::max(worst, spectral_norm(pushed.a(w)));
    }
    if (sign > 0 || worst < best_norm) {
      best_norm = worst;
      best = tf;
      if (worst < 1e-10) break;
    }
  }
  return best;
}

double model_convergence_gap(const AlmostComplexChart& normalized_chart,
                             const ModelStructure& model, double lambda,
                             double compact_radius, int samples, uint64_t seed) {
  AlmostComplexChart a_lambda = dilate_chart(normalized_chart, lambda, DilationMode::Nonisotropic);
  AlmostComplexChart a0 = model_chart(model, compact_radius * 2.0);
  auto cloud = ball_samples(model.n, compact_radius, samples, seed);
  double worst = 0.0;
  for (const auto& w : cloud)
    worst = std::max(worst, spectral_norm(a_lambda.a(w) - a0.a(w)));
  return worst;
}

}  // namespace acx
