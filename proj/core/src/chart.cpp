#include "acx/chart.hpp"

#include <Eigen/LU>

#include "acx/errors.hpp"
#include "acx/rng.hpp"

namespace acx {

AlmostComplexChart::AlmostComplexChart(PolyMatrix table, double radius)
    : n_(table.dim()), radius_(radius), poly_(std::move(table)) {
  if (poly_->rows() != n_ || poly_->cols() != n_)
    throw SpecError("chart table must be n x n over C^n", "entries");
  const PolyMatrix& p = *poly_;
  a_ = [p](const CVector& z) { return p.eval(z); };
  std::vector<PolyMatrix> dzs, dzbars;
  for (int m = 0; m < n_; ++m) {
    dzs.push_back(p.dz(m));
    dzbars.push_back(p.dzbar(m));
  }
  dz_ = [dzs](const CVector& z, int m) { return dzs[m].eval(z); };
  dzbar_ = [dzbars](const CVector& z, int m) { return dzbars[m].eval(z); };
}

AlmostComplexChart::AlmostComplexChart(int n, double radius, MatrixEval a)
    : n_(n), radius_(radius), a_(std::move(a)) {}

AlmostComplexChart::AlmostComplexChart(int n, double radius, MatrixEval a, MatrixDerivEval dz,
                                       MatrixDerivEval dzbar)
    : n_(n), radius_(radius), a_(std::move(a)), dz_(std::move(dz)), dzbar_(std::move(dzbar)) {}

AlmostComplexChart AlmostComplexChart::standard(int n, double radius) {
  PolyMatrix zero(n, n, n);
  return AlmostComplexChart(zero, radius);
}

CMatrix AlmostComplexChart::da_dz(const CVector& z, int m) const {
  if (dz_) return dz_(z, m);
  double h = fd_step();
  CVector zp = z, zm = z;
  zp[m] += h;
  zm[m] -= h;
  CVector zpi = z, zmi = z;
  zpi[m] += Complex(0, h);
  zmi[m] -= Complex(0, h);
  CMatrix dx = (a_(zp) - a_(zm)) / (2 * h);
  CMatrix dy = (a_(zpi) - a_(zmi)) / (2 * h);
  return 0.5 * (dx - kI * dy);
}

CMatrix AlmostComplexChart::da_dzbar(const CVector& z, int m) const {
  if (dzbar_) return dzbar_(z, m);
  double h = fd_step();
  CVector zp = z, zm = z;
  zp[m] += h;
  zm[m] -= h;
  CVector zpi = z, zmi = z;
  zpi[m] += Complex(0, h);
  zmi[m] -= Complex(0, h);
  CMatrix dx = (a_(zp) - a_(zm)) / (2 * h);
  CMatrix dy = (a_(zpi) - a_(zmi)) / (2 * h);
  return 0.5 * (dx + kI * dy);
}

ValidationReport validate_chart(const AlmostComplexChart& chart,
                                const std::vector<CVector>& samples, double margin) {
  ValidationReport rep;
  rep.margin = margin;
  rep.samples = int(samples.size());
  rep.argmax = CVector::Zero(chart.dimension());
  for (const auto& z : samples) {
    if (!chart.contains(z))
      throw DomainError("validation sample outside the chart ball");
    double s = spectral_norm(chart.a(z));
    if (s > rep.max_norm) {
      rep.max_norm = s;
      rep.argmax = z;
    }
  }
  rep.pass = rep.max_norm < 1.0 - margin;
  return rep;
}

std::vector<CVector> ball_samples(int n, double radius, int count, uint64_t seed) {
  std::vector<CVector> out;
  out.reserve(count);
  out.push_back(CVector::Zero(n));
  Rng rng(seed);
  while ((int)out.size() < count) {
    // Radius biased outward so near-boundary maxima are seen.
    double r = radius * std::sqrt(rng.next_double());
    CVector dir = rng.next_unit_vector(n);
    out.push_back(r * dir);
  }
  return out;
}

void require_valid(const AlmostComplexChart& chart, const std::vector<CVector>& samples,
                   double margin) {
  auto rep = validate_chart(chart, samples, margin);
  if (!rep.pass)
    throw NormTooLarge("spectral norm of A reaches " + std::to_string(rep.max_norm),
                       rep.argmax, rep.max_norm);
}

RMatrix j_matrix_from_a(const CMatrix& a) {
  int n = int(a.rows());
  double s = spectral_norm(a);
  if (s >= 1.0)
    throw NormTooLarge("cannot reconstruct J: |A| >= 1", CVector::Zero(n), s);
  RMatrix l = realify_antilinear(a);
  RMatrix id = RMatrix::Identity(2 * n, 2 * n);
  // J = J_st (I - L)(I + L)^{-1}; the right division X(I+L) = I-L is solved
  // through the transposed system.
  RMatrix rd = ((id + l).transpose().partialPivLu().solve((id - l).transpose())).transpose();
  return jst_matrix(n) * rd;
}

RMatrix j_matrix(const AlmostComplexChart& chart, const CVector& z) {
  return j_matrix_from_a(chart.a(z));
}

}  // namespace acx
