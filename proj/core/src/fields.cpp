#include "acx/fields.hpp"

#include <cmath>

namespace acx {

CVector ScalarField::grad_z_at(const CVector& z, double h) const {
  if (grad_z) return grad_z(z);
  int n = int(z.size());
  CVector g(n);
  for (int m = 0; m < n; ++m) {
    CVector zp = z, zm = z, zpi = z, zmi = z;
    zp[m] += h;
    zm[m] -= h;
    zpi[m] += Complex(0, h);
    zmi[m] -= Complex(0, h);
    Complex dx = (eval(zp) - eval(zm)) / (2 * h);
    Complex dy = (eval(zpi) - eval(zmi)) / (2 * h);
    g[m] = 0.5 * (dx - kI * dy);
  }
  return g;
}

CVector ScalarField::grad_zbar_at(const CVector& z, double h) const {
  if (grad_zbar) return grad_zbar(z);
  int n = int(z.size());
  CVector g(n);
  for (int m = 0; m < n; ++m) {
    CVector zp = z, zm = z, zpi = z, zmi = z;
    zp[m] += h;
    zm[m] -= h;
    zpi[m] += Complex(0, h);
    zmi[m] -= Complex(0, h);
    Complex dx = (eval(zp) - eval(zm)) / (2 * h);
    Complex dy = (eval(zpi) - eval(zmi)) / (2 * h);
    g[m] = 0.5 * (dx + kI * dy);
  }
  return g;
}

double ScalarField::dbar_j_residual(const AlmostComplexChart& chart, const CVector& z) const {
  CVector fz = grad_z_at(z);
  CVector fzb = grad_zbar_at(z);
  CMatrix a = chart.a(z);
  CVector row = fzb + a.transpose() * fz;  // row vector F_zbar + F_z A
  return row.norm();
}

BoundCheck verify_declared_bounds(const ScalarField& field, const AlmostComplexChart& chart,
                                  const std::vector<CVector>& samples) {
  BoundCheck out;
  for (const auto& z : samples) {
    out.max_abs = std::max(out.max_abs, std::abs(field.eval(z)));
    out.max_dbar = std::max(out.max_dbar, field.dbar_j_residual(chart, z));
  }
  out.ok = out.max_abs <= field.sup_bound * 1.1 + 1e-12 &&
           out.max_dbar <= field.dbar_bound * 1.1 + 1e-9;
  return out;
}

namespace fields {

ScalarField constant(int n, Complex c) {
  ScalarField f;
  f.name = "const";
  f.eval = [c](const CVector&) { return c; };
  f.grad_z = [n](const CVector&) { return CVector(CVector::Zero(n)); };
  f.grad_zbar = [n](const CVector&) { return CVector(CVector::Zero(n)); };
  f.sup_bound = std::abs(c);
  f.dbar_bound = 0.0;
  return f;
}

ScalarField coordinate(int n, int j) {
  ScalarField f;
  f.name = "z" + std::to_string(j + 1);
  f.eval = [j](const CVector& z) { return z[j]; };
  f.grad_z = [n, j](const CVector&) {
    CVector g = CVector::Zero(n);
    g[j] = 1.0;
    return g;
  };
  f.grad_zbar = [n](const CVector&) { return CVector(CVector::Zero(n)); };
  f.sup_bound = 1.0;   // on the unit chart ball
  f.dbar_bound = 1.0;  // |row A| <= |A| <= 1 on valid charts
  return f;
}

ScalarField conj_coordinate_half(int n, int j) {
  ScalarField f;
  f.name = "conj_z" + std::to_string(j + 1) + "_half";
  f.eval = [j](const CVector& z) { return std::conj(z[j]) / 2.0; };
  f.grad_z = [n](const CVector&) { return CVector(CVector::Zero(n)); };
  f.grad_zbar = [n, j](const CVector&) {
    CVector g = CVector::Zero(n);
    g[j] = 0.5;
    return g;
  };
  f.sup_bound = 0.5;
  f.dbar_bound = 0.5;
  return f;
}

ScalarField exp_inv_zn(int n) {
  ScalarField f;
  f.name = "exp_inv_zn";
  f.eval = [n](const CVector& z) { return std::exp(kI / z[n - 1]); };
  f.grad_z = [n](const CVector& z) {
    CVector g = CVector::Zero(n);
    Complex w = z[n - 1];
    g[n - 1] = -kI / (w * w) * std::exp(kI / w);
    return g;
  };
  f.grad_zbar = [n](const CVector&) { return CVector(CVector::Zero(n)); };
  // |exp(i/z_n)| = exp(Im z_n / |z_n|^2) <= 1 on Im z_n < 0.
  f.sup_bound = 1.0;
  f.dbar_bound = 0.0;  // holomorphic; exact for the standard Siegel structure
  return f;
}

ScalarField zn_pow_i(int n) {
  ScalarField f;
  f.name = "zn_pow_i";
  f.eval = [n](const CVector& z) { return std::exp(kI * std::log(z[n - 1])); };
  f.grad_z = [n](const CVector& z) {
    CVector g = CVector::Zero(n);
    Complex w = z[n - 1];
    g[n - 1] = kI / w * std::exp(kI * std::log(w));
    return g;
  };
  f.grad_zbar = [n](const CVector&) { return CVector(CVector::Zero(n)); };
  // |z^i| = exp(-arg z) <= e^pi on the lower half plane (principal branch).
  f.sup_bound = std::exp(M_PI);
  f.dbar_bound = 0.0;
  return f;
}

ScalarField exp_inv_plus_conj(int n) {
  ScalarField inner = exp_inv_zn(n);
  ScalarField conj1 = conj_coordinate_half(n, 0);
  ScalarField f;
  f.name = "exp_inv_zn_plus_conj_z1_half";
  auto ie = inner.eval, ce = conj1.eval;
  f.eval = [ie, ce](const CVector& z) { return ie(z) + ce(z); };
  auto igz = inner.grad_z, cgz = conj1.grad_z;
  f.grad_z = [igz, cgz](const CVector& z) { return CVector(igz(z) + cgz(z)); };
  auto igzb = inner.grad_zbar, cgzb = conj1.grad_zbar;
  f.grad_zbar = [igzb, cgzb](const CVector& z) { return CVector(igzb(z) + cgzb(z)); };
  f.sup_bound = inner.sup_bound + conj1.sup_bound;
  f.dbar_bound = inner.dbar_bound + conj1.dbar_bound;
  return f;
}

ScalarField cutoff_product(int n) {
  // chi(|z|^2) * z_n^{1+i} with a C^1 polynomial cutoff: chi = 1 on |z| <= 0.4,
  // 0 on |z| >= 0.8, smoothstep between.
  ScalarField f;
  f.name = "cutoff_zn_pow_1pi";
  auto chi = [](double s2) {
    double t = (s2 - 0.16) / (0.64 - 0.16);
    if (t <= 0) return 1.0;
    if (t >= 1) return 0.0;
    return 1.0 - t * t * (3.0 - 2.0 * t);
  };
  f.eval = [n, chi](const CVector& z) {
    Complex w = z[n - 1];
    Complex v = w * std::exp(kI * std::log(w));
    return chi(z.squaredNorm()) * v;
  };
  f.sup_bound = 1.0 * std::exp(M_PI);
  // d chi term: |chi'| <= 1.5/0.48 ~ 3.2, |z| <= 0.8, |z_n^{1+i}| <= 0.8 e^pi.
  f.dbar_bound = 2.0 * 3.2 * 0.8 * 0.8 * std::exp(M_PI);
  return f;
}

std::vector<ScalarField> catalog(int n) {
  std::vector<ScalarField> out;
  out.push_back(constant(n, Complex(0.7, -0.2)));
  for (int j = 0; j < n; ++j) out.push_back(coordinate(n, j));
  out.push_back(conj_coordinate_half(n, 0));
  out.push_back(exp_inv_zn(n));
  out.push_back(zn_pow_i(n));
  out.push_back(exp_inv_plus_conj(n));
  out.push_back(cutoff_product(n));
  return out;
}

}  // namespace fields

}  // namespace acx
