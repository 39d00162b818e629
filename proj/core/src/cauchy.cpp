#include "acx/cauchy.hpp"

#include <cmath>

#include "acx/errors.hpp"
#include "acx/fft.hpp"
#include "acx/parallel.hpp"

namespace acx {

namespace {

// Integral over [a, b] of (d0 + d1 r + d2 r^2) * (r/s)^q dr. All call sites
// keep the ratio r/s on the bounded side of 1, so no power here overflows.
Complex weighted_integral(Complex d0, Complex d1, Complex d2, double a, double b, double s,
                          int q) {
  if (b <= a) return {0.0, 0.0};
  if (q == 0) {
    auto prim = [&](double r) { return d0 * r + d1 * r * r / 2.0 + d2 * r * r * r / 3.0; };
    return prim(b) - prim(a);
  }
  double xa = a / s, xb = b / s;
  Complex acc{0.0, 0.0};
  double sp = s;
  const Complex ds[3] = {d0, d1, d2};
  for (int t = 0; t <= 2; ++t) {
    int e = t + q;
    double integral;
    if (e == -1)
      integral = std::log(xb / xa);
    else
      integral = (std::pow(xb, e + 1) - std::pow(xa, e + 1)) / double(e + 1);
    acc += ds[t] * sp * integral;
    sp *= s;
  }
  return acc;
}

}  // namespace

CauchyGreen::CauchyGreen(const DiscGrid& f) : nr_(f.nr()), ntheta_(f.ntheta()), ncomp_(f.ncomp()) {
  const int nr = nr_, nt = ntheta_;
  const double dr = 1.0 / nr;
  comp_modes_.resize(ncomp_);

  for (int c = 0; c < ncomp_; ++c) {
    // Angular DFT per ring.
    std::vector<std::vector<Complex>> hat(nr, std::vector<Complex>(nt));
    for (int j = 0; j < nr; ++j) {
      std::vector<Complex> row(nt);
      for (int k = 0; k < nt; ++k) row[k] = f.value(j, k, c);
      fft_forward(row);
      for (int b = 0; b < nt; ++b) hat[j][b] = row[b] / double(nt);
    }

    auto& modes = comp_modes_[c];
    modes.resize(nt);
    for (int bin = 0; bin < nt; ++bin) {
      int m = signed_mode(bin, nt);
      ModeData& md = modes[bin];
      md.d0.resize(nr);
      md.d1.resize(nr);
      md.d2.resize(nr);

      // Per-cell quadratic through the node triple; the center ring uses the
      // reflected ghost g(-r) = (-1)^m g(r), the outer ring a one-sided triple.
      for (int j = 0; j < nr; ++j) {
        double rj = f.r(j);
        Complex gm1 = j > 0 ? hat[j - 1][bin]
                            : (m % 2 == 0 ? hat[0][bin] : -hat[0][bin]);
        Complex g0 = hat[j][bin];
        Complex gp1;
        Complex c1, c2;
        if (j + 1 < nr) {
          gp1 = hat[j + 1][bin];
          c1 = (gp1 - gm1) / (2.0 * dr);
          c2 = (gp1 - 2.0 * g0 + gm1) / (2.0 * dr * dr);
        } else {
          Complex gmm2 = hat[j - 2][bin];
          c1 = (3.0 * g0 - 4.0 * gm1 + gmm2) / (2.0 * dr);
          c2 = (g0 - 2.0 * gm1 + gmm2) / (2.0 * dr * dr);
        }
        // Recenter d0 + d1 r + d2 r^2 from g0 + c1 (r - rj) + c2 (r - rj)^2.
        md.d2[j] = c2;
        md.d1[j] = c1 - 2.0 * c2 * rj;
        md.d0[j] = g0 - c1 * rj + c2 * rj * rj;
      }

      const int q = 1 - m;
      if (m <= 0) {
        md.prefix.resize(nr);
        // prefix[j] = s_j^{m-1} * int_0^{s_j} g r^{1-m} dr
        double s0 = f.r(0);
        md.prefix[0] = weighted_integral(md.d0[0], md.d1[0], md.d2[0], 0.0, s0, s0, q);
        for (int j = 0; j + 1 < nr; ++j) {
          double sj = f.r(j), sj1 = f.r(j + 1);
          double bj = (j + 1) * dr;
          Complex local =
              weighted_integral(md.d0[j], md.d1[j], md.d2[j], sj, bj, sj1, q) +
              weighted_integral(md.d0[j + 1], md.d1[j + 1], md.d2[j + 1], bj, sj1, sj1, q);
          md.prefix[j + 1] = std::pow(sj / sj1, q) * md.prefix[j] + local;
        }
        double slast = f.r(nr - 1);
        md.full = std::pow(slast, q) * md.prefix[nr - 1] +
                  weighted_integral(md.d0[nr - 1], md.d1[nr - 1], md.d2[nr - 1], slast, 1.0,
                                    1.0, q);
      } else {
        md.suffix.resize(nr);
        // suffix[j] = s_j^{m-1} * int_{s_j}^{1} g r^{1-m} dr
        double slast = f.r(nr - 1);
        md.suffix[nr - 1] = weighted_integral(md.d0[nr - 1], md.d1[nr - 1], md.d2[nr - 1],
                                              slast, 1.0, slast, q);
        for (int j = nr - 2; j >= 0; --j) {
          double sj = f.r(j), sj1 = f.r(j + 1);
          double bj = (j + 1) * dr;
          Complex local =
              weighted_integral(md.d0[j], md.d1[j], md.d2[j], sj, bj, sj, q) +
              weighted_integral(md.d0[j + 1], md.d1[j + 1], md.d2[j + 1], bj, sj1, sj, q);
          md.suffix[j] = std::pow(sj / sj1, m - 1) * md.suffix[j + 1] + local;
        }
      }
    }
  }
}

Complex CauchyGreen::mode_value(const ModeData& md, int m, double s) const {
  const double dr = 1.0 / nr_;
  const int q = 1 - m;
  const double orient = 2.0 * kCauchyGreenOrientation;
  auto node_r = [&](int j) { return (j + 0.5) * dr; };

  if (m <= 0) {
    if (s >= 1.0) return orient * std::pow(s, m - 1) * md.full;
    if (s < 1e-14) return {0.0, 0.0};
    double s0 = node_r(0);
    if (s <= s0) return orient * weighted_integral(md.d0[0], md.d1[0], md.d2[0], 0.0, s, s, q);
    int jlo = std::min(int(s / dr - 0.5), nr_ - 1);
    double sj = node_r(jlo);
    Complex acc = std::pow(sj / s, q) * md.prefix[jlo];
    double bj = (jlo + 1) * dr;  // equals 1 for the outer ring
    if (s <= bj) {
      acc += weighted_integral(md.d0[jlo], md.d1[jlo], md.d2[jlo], sj, s, s, q);
    } else {
      acc += weighted_integral(md.d0[jlo], md.d1[jlo], md.d2[jlo], sj, bj, s, q);
      acc += weighted_integral(md.d0[jlo + 1], md.d1[jlo + 1], md.d2[jlo + 1], bj, s, s, q);
    }
    return orient * acc;
  }

  // m >= 1: supported inside the disc only.
  if (s >= 1.0) return {0.0, 0.0};
  double slast = node_r(nr_ - 1);
  if (s >= slast)
    return -orient *
           weighted_integral(md.d0[nr_ - 1], md.d1[nr_ - 1], md.d2[nr_ - 1], s, 1.0, s, q);
  double s0 = node_r(0);
  int jhi;
  Complex acc{0.0, 0.0};
  if (s < s0) {
    jhi = 0;
    if (s < 1e-300) {
      // Only the unweighted mode (m = 1) survives at the origin.
      if (q != 0) return {0.0, 0.0};
      acc = weighted_integral(md.d0[0], md.d1[0], md.d2[0], 0.0, s0, 1.0, 0);
      return -orient * (acc + md.suffix[0]);
    }
    acc += weighted_integral(md.d0[0], md.d1[0], md.d2[0], s, s0, s, q);
  } else {
    int jlo = std::min(int(s / dr - 0.5), nr_ - 2);
    jhi = jlo + 1;
    double bj = (jlo + 1) * dr;
    if (s <= bj) {
      acc += weighted_integral(md.d0[jlo], md.d1[jlo], md.d2[jlo], s, bj, s, q);
      acc += weighted_integral(md.d0[jhi], md.d1[jhi], md.d2[jhi], bj, node_r(jhi), s, q);
    } else {
      acc += weighted_integral(md.d0[jhi], md.d1[jhi], md.d2[jhi], s, node_r(jhi), s, q);
    }
  }
  acc += std::pow(s / node_r(jhi), m - 1) * md.suffix[jhi];
  return -orient * acc;
}

CVector CauchyGreen::eval(Complex zeta) const {
  double s = std::abs(zeta);
  double phi = std::arg(zeta);
  CVector out = CVector::Zero(ncomp_);
  for (int c = 0; c < ncomp_; ++c) {
    Complex acc{0.0, 0.0};
    for (int bin = 0; bin < ntheta_; ++bin) {
      int m = signed_mode(bin, ntheta_);
      Complex g = mode_value(comp_modes_[c][bin], m, s);
      if (g != Complex{0.0, 0.0}) acc += g * std::polar(1.0, (m - 1) * phi);
    }
    out[c] = acc;
  }
  return out;
}

Complex CauchyGreen::eval_scalar(Complex zeta, int comp) const { return eval(zeta)[comp]; }

DiscGrid CauchyGreen::on_grid() const {
  DiscGrid out(nr_, ntheta_, ncomp_);
  const int nt = ntheta_;
  for (int c = 0; c < ncomp_; ++c) {
    parallel_for(nr_, [&](long j) {
      std::vector<Complex> spec(nt, Complex{0.0, 0.0});
      for (int bin = 0; bin < nt; ++bin) {
        int m = signed_mode(bin, nt);
        Complex g = m <= 0 ? Complex(2.0 * kCauchyGreenOrientation) * comp_modes_[c][bin].prefix[j]
                           : Complex(-2.0 * kCauchyGreenOrientation) * comp_modes_[c][bin].suffix[j];
        int obin = ((m - 1) % nt + nt) % nt;
        spec[obin] += g;
      }
      fft_inverse(spec);
      for (int k = 0; k < nt; ++k) out.value(int(j), k, c) = spec[k] * double(nt);
    });
  }
  return out;
}

BoundaryTrace CauchyGreen::boundary_trace(int m) const {
  return BoundaryTrace::sample(m, ncomp_, [this](Complex w) { return eval(w); });
}

CVector CauchyIntegral::eval(Complex zeta) const {
  if (std::abs(zeta) > guard_radius())
    throw EvaluationTooCloseToBoundary("Cauchy transform evaluated within 2 pi / M of the circle");
  int m = trace_.size();
  CVector out = CVector::Zero(trace_.ncomp());
  for (int k = 0; k < m; ++k) {
    Complex w = trace_.node(k);
    Complex kern = w / (w - zeta) / double(m);
    for (int c = 0; c < trace_.ncomp(); ++c) out[c] += kern * trace_.value(k, c);
  }
  return out;
}

Complex CauchyIntegral::eval_scalar(Complex zeta, int comp) const { return eval(zeta)[comp]; }

namespace {

// Shared stencil: per-mode radial derivative plus the mode shift of the
// polar Wirtinger operators.
DiscGrid wirtinger(const DiscGrid& f, bool bar) {
  const int nr = f.nr(), nt = f.ntheta();
  const double dr = 1.0 / nr;
  DiscGrid out(nr, nt, f.ncomp());
  for (int c = 0; c < f.ncomp(); ++c) {
    std::vector<std::vector<Complex>> hat(nr, std::vector<Complex>(nt));
    for (int j = 0; j < nr; ++j) {
      std::vector<Complex> row(nt);
      for (int k = 0; k < nt; ++k) row[k] = f.value(j, k, c);
      fft_forward(row);
      hat[j] = std::move(row);
    }
    std::vector<std::vector<Complex>> ospec(nr, std::vector<Complex>(nt, Complex{0, 0}));
    for (int bin = 0; bin < nt; ++bin) {
      int m = signed_mode(bin, nt);
      int mo = bar ? m + 1 : m - 1;
      if (mo > nt / 2 || mo < -nt / 2 + 1) continue;  // dropped shifted Nyquist
      int obin = ((mo % nt) + nt) % nt;
      for (int j = 0; j < nr; ++j) {
        Complex gm1 = j > 0 ? hat[j - 1][bin]
                            : (m % 2 == 0 ? hat[0][bin] : -hat[0][bin]);
        Complex deriv;
        if (j + 1 < nr)
          deriv = (hat[j + 1][bin] - gm1) / (2.0 * dr);
        else
          deriv = (3.0 * hat[j][bin] - 4.0 * hat[j - 1][bin] + hat[j - 2][bin]) / (2.0 * dr);
        double rj = f.r(j);
        Complex val = bar ? 0.5 * (deriv - double(m) / rj * hat[j][bin])
                          : 0.5 * (deriv + double(m) / rj * hat[j][bin]);
        ospec[j][obin] += val;
      }
    }
    for (int j = 0; j < nr; ++j) {
      fft_inverse(ospec[j]);
      for (int k = 0; k < nt; ++k) out.value(j, k, c) = ospec[j][k];
    }
  }
  return out;
}

}  // namespace

DiscGrid dbar_grid(const DiscGrid& f) { return wirtinger(f, true); }
DiscGrid dzeta_grid(const DiscGrid& f) { return wirtinger(f, false); }

Decomposition decompose_subsolution(const DiscGrid& f) {
  DiscGrid fz = dbar_grid(f);
  CauchyGreen t(fz);
  DiscGrid tpart = t.on_grid();
  Decomposition out{f, tpart};
  out.g.values() -= tpart.values();
  return out;
}

}  // namespace acx
