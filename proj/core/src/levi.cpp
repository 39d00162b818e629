#include "acx/levi.hpp"

#include "acx/rng.hpp"

namespace acx {

double directional_hessian(const RealField& u, const CVector& p, const CVector& v, double h) {
  double scale = std::max(1.0, v.norm());
  double step = h / scale;
  CVector vp = p + step * v, vm = p - step * v;
  return (u.eval(vp) - 2.0 * u.eval(p) + u.eval(vm)) / (step * step);
}

static CVector real_gradient(const RealField& u, const CVector& p, double h) {
  if (u.grad) return u.grad(p);
  int n = int(p.size());
  CVector g(n);
  for (int m = 0; m < n; ++m) {
    CVector pp = p, pm = p;
    pp[m] += h;
    pm[m] -= h;
    double dx = (u.eval(pp) - u.eval(pm)) / (2 * h);
    pp = p;
    pm = p;
    pp[m] += Complex(0, h);
    pm[m] -= Complex(0, h);
    double dy = (u.eval(pp) - u.eval(pm)) / (2 * h);
    g[m] = Complex(dx, dy);
  }
  return g;
}

static double pair_du(const CVector& grad, const CVector& v) {
  // Real pairing du(v) with grad in the complex representation.
  double s = 0.0;
  for (int i = 0; i < grad.size(); ++i)
    s += grad[i].real() * v[i].real() + grad[i].imag() * v[i].imag();
  return s;
}

double levi_form(const AlmostComplexChart& chart, const RealField& u, const CVector& p,
                 const CVector& v) {
  double h = chart.fd_step();
  double hu = u.fd_step * std::max(1.0, chart.radius());

  RMatrix jp = j_matrix(chart, p);
  CVector w = complexify(jp * realify(v));

  double hess_vv = directional_hessian(u, p, v, hu);
  double hess_ww = directional_hessian(u, p, w, hu);

  // Directional derivatives of the J field.
  auto dj_along = [&](const CVector& dir) {
    double scale = std::max(1.0, dir.norm());
    double step = h / scale;
    RMatrix jf = j_matrix(chart, p + step * dir);
    RMatrix jb = j_matrix(chart, p - step * dir);
    return RMatrix((jf - jb) / (2 * step));
  };
  RMatrix dvj = dj_along(v);
  RMatrix dwj = dj_along(w);

  CVector grad = real_gradient(u, p, hu);
  CVector t1 = complexify(dwj * realify(v));
  CVector t2 = complexify(jp * (dvj * realify(v)));
  return hess_vv + hess_ww + pair_du(grad, t1) + pair_du(grad, t2);
}

PshVerdict is_strictly_psh_at(const AlmostComplexChart& chart, const RealField& u,
                              const CVector& p, int directions, double eps, uint64_t seed) {
  PshVerdict verdict;
  Rng rng(seed);
  int n = chart.dimension();
  bool first = true;
  for (int k = 0; k < directions; ++k) {
    CVector v = rng.next_unit_vector(n);
    double val = levi_form(chart, u, p, v);
    if (first || val < verdict.min_value) {
      verdict.min_value = val;
      verdict.argmin = v;
      first = false;
    }
  }
  verdict.strictly_psh = verdict.min_value > eps;
  return verdict;
}

}  // namespace acx
