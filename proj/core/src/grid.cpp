#include "acx/grid.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>

#include "acx/errors.hpp"

namespace acx {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

DiscGrid::DiscGrid(int nr, int ntheta, int ncomp) : nr_(nr), ntheta_(ntheta), ncomp_(ncomp) {
  if (nr < 2 || ntheta < 4 || ncomp < 1) throw SpecError("grid too small", "grid");
  values_ = CMatrix::Zero(nodes(), ncomp);
}

DiscGrid DiscGrid::sample(int nr, int ntheta, int ncomp,
                          const std::function<CVector(Complex)>& f) {
  DiscGrid g(nr, ntheta, ncomp);
  for (int j = 0; j < nr; ++j)
    for (int k = 0; k < ntheta; ++k) g.values_.row(g.index(j, k)) = f(g.node(j, k)).transpose();
  return g;
}

DiscGrid DiscGrid::sample_scalar(int nr, int ntheta, const std::function<Complex(Complex)>& f) {
  return sample(nr, ntheta, 1, [&](Complex z) {
    CVector v(1);
    v[0] = f(z);
    return v;
  });
}

double DiscGrid::sup_norm() const {
  double worst = 0.0;
  for (long i = 0; i < values_.rows(); ++i) worst = std::max(worst, values_.row(i).norm());
  return worst;
}

double DiscGrid::lp_norm(double p) const {
  double acc = 0.0;
  for (int j = 0; j < nr_; ++j) {
    double w = cell_area(j);
    for (int k = 0; k < ntheta_; ++k)
      acc += w * std::pow(values_.row(index(j, k)).norm(), p);
  }
  return std::pow(acc, 1.0 / p);
}

CVector DiscGrid::interpolate(Complex zeta) const {
  double rr = std::abs(zeta);
  double th = std::arg(zeta);
  if (th < 0) th += 2.0 * M_PI;
  double dr = 1.0 / nr_;
  double dth = 2.0 * M_PI / ntheta_;
  double xj = rr / dr - 0.5;
  int j0 = int(std::floor(xj));
  double tj = xj - j0;
  if (j0 < 0) {
    j0 = 0;
    tj = 0.0;
  }
  if (j0 + 1 >= nr_) {
    j0 = nr_ - 2;
    tj = 1.0;
  }
  double xk = th / dth;
  int k0 = int(std::floor(xk)) % ntheta_;
  double tk = xk - std::floor(xk);
  int k1 = (k0 + 1) % ntheta_;
  CVector v00 = value_vector(j0, k0), v01 = value_vector(j0, k1);
  CVector v10 = value_vector(j0 + 1, k0), v11 = value_vector(j0 + 1, k1);
  return (1 - tj) * ((1 - tk) * v00 + tk * v01) + tj * ((1 - tk) * v10 + tk * v11);
}

void DiscGrid::write_csv(std::ostream& os) const {
  os << "# {\"type\":\"disc_grid\",\"nr\":" << nr_ << ",\"ntheta\":" << ntheta_
     << ",\"ncomp\":" << ncomp_ << "}\n";
  os << "j,k";
  for (int c = 0; c < ncomp_; ++c) os << ",re" << c << ",im" << c;
  os << "\n";
  for (int j = 0; j < nr_; ++j) {
    for (int k = 0; k < ntheta_; ++k) {
      os << j << "," << k;
      for (int c = 0; c < ncomp_; ++c) {
        Complex v = value(j, k, c);
        os << "," << format_double(v.real()) << "," << format_double(v.imag());
      }
      os << "\n";
    }
  }
}

static void parse_header(const std::string& line, const char* type, int& a, int& b, int& c) {
  auto grab = [&](const char* key) {
    auto pos = line.find(key);
    if (pos == std::string::npos) throw SpecError("missing grid header key", key);
    return std::atoi(line.c_str() + pos + std::strlen(key));
  };
  if (line.find(type) == std::string::npos) throw SpecError("wrong CSV type header", type);
  a = grab("\"nr\":");
  b = grab("\"ntheta\":");
  c = grab("\"ncomp\":");
}

DiscGrid DiscGrid::read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw SpecError("empty grid CSV", "header");
  int nr, nt, nc;
  parse_header(line, "disc_grid", nr, nt, nc);
  std::getline(is, line);  // column header
  DiscGrid g(nr, nt, nc);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    auto next = [&]() {
      if (!std::getline(ss, cell, ',')) throw SpecError("short CSV row", "row");
      return cell;
    };
    int j = std::stoi(next());
    int k = std::stoi(next());
    for (int c = 0; c < nc; ++c) {
      double re = std::stod(next());
      double im = std::stod(next());
      g.value(j, k, c) = Complex(re, im);
    }
  }
  return g;
}

BoundaryTrace::BoundaryTrace(int m, int ncomp) : m_(m), ncomp_(ncomp) {
  if (m < 4 || m % 2 != 0) throw SpecError("boundary trace size must be even and >= 4", "m");
  values_ = CMatrix::Zero(m, ncomp);
}

BoundaryTrace BoundaryTrace::sample(int m, int ncomp,
                                    const std::function<CVector(Complex)>& f) {
  BoundaryTrace t(m, ncomp);
  for (int k = 0; k < m; ++k) t.values_.row(k) = f(t.node(k)).transpose();
  return t;
}

BoundaryTrace BoundaryTrace::sample_scalar(int m, const std::function<Complex(Complex)>& f) {
  return sample(m, 1, [&](Complex z) {
    CVector v(1);
    v[0] = f(z);
    return v;
  });
}

double BoundaryTrace::sup_norm() const {
  double worst = 0.0;
  for (int k = 0; k < m_; ++k) worst = std::max(worst, values_.row(k).norm());
  return worst;
}

void BoundaryTrace::write_csv(std::ostream& os) const {
  os << "# {\"type\":\"boundary_trace\",\"m\":" << m_ << ",\"ncomp\":" << ncomp_ << "}\n";
  os << "k";
  for (int c = 0; c < ncomp_; ++c) os << ",re" << c << ",im" << c;
  os << "\n";
  for (int k = 0; k < m_; ++k) {
    os << k;
    for (int c = 0; c < ncomp_; ++c) {
      Complex v = value(k, c);
      os << "," << format_double(v.real()) << "," << format_double(v.imag());
    }
    os << "\n";
  }
}

BoundaryTrace BoundaryTrace::read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw SpecError("empty trace CSV", "header");
  auto grab = [&](const char* key) {
    auto pos = line.find(key);
    if (pos == std::string::npos) throw SpecError("missing trace header key", key);
    return std::atoi(line.c_str() + pos + std::strlen(key));
  };
  if (line.find("boundary_trace") == std::string::npos)
    throw SpecError("wrong CSV type header", "boundary_trace");
  int m = grab("\"m\":");
  int nc = grab("\"ncomp\":");
  std::getline(is, line);
  BoundaryTrace t(m, nc);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    auto next = [&]() {
      if (!std::getline(ss, cell, ',')) throw SpecError("short CSV row", "row");
      return cell;
    };
    int k = std::stoi(next());
    for (int c = 0; c < nc; ++c) {
      double re = std::stod(next());
      double im = std::stod(next());
      t.value(k, c) = Complex(re, im);
    }
  }
  return t;
}

}  // namespace acx
