#include <doctest.h>

#include "acx/polynomial.hpp"

using namespace acx;

TEST_CASE("matrix table evaluation and derivatives") {
  // A(z) = [[z1^2 conj(z2), 0], [3 conj(z1), z2]]
  PolyMatrix table(2, 2, 2);
  table.add_term(0, 0, {2, 0}, {0, 1}, 1.0);
  table.add_term(1, 0, {0, 0}, {1, 0}, 3.0);
  table.add_term(1, 1, {0, 1}, {0, 0}, 1.0);

  CVector z(2);
  z << Complex(0.5, 0.1), Complex(-0.2, 0.3);
  CMatrix a = table.eval(z);
  CHECK(std::abs(a(0, 0) - z[0] * z[0] * std::conj(z[1])) < 1e-15);
  CHECK(std::abs(a(1, 0) - 3.0 * std::conj(z[0])) < 1e-15);
  CHECK(std::abs(a(1, 1) - z[1]) < 1e-15);

  CMatrix dz0 = table.dz(0).eval(z);
  CHECK(std::abs(dz0(0, 0) - 2.0 * z[0] * std::conj(z[1])) < 1e-15);
  CHECK(std::abs(dz0(1, 0)) < 1e-15);

  CMatrix dzb1 = table.dzbar(1).eval(z);
  CHECK(std::abs(dzb1(0, 0) - z[0] * z[0]) < 1e-15);
  CHECK(std::abs(dzb1(1, 1)) < 1e-15);

  CHECK(table.degree() == 3);
}

TEST_CASE("derivatives agree with central differences") {
  PolyMatrix table(2, 2, 2);
  table.add_term(0, 1, {1, 1}, {0, 1}, Complex(0.3, -0.7));
  table.add_term(1, 0, {0, 0}, {2, 0}, Complex(-0.1, 0.2));

  CVector z(2);
  z << Complex(0.2, -0.4), Complex(0.1, 0.25);
  double h = 1e-5;
  for (int m = 0; m < 2; ++m) {
    CVector zp = z, zm = z, zpi = z, zmi = z;
    zp[m] += h;
    zm[m] -= h;
    zpi[m] += Complex(0, h);
    zmi[m] -= Complex(0, h);
    CMatrix dx = (table.eval(zp) - table.eval(zm)) / (2 * h);
    CMatrix dy = (table.eval(zpi) - table.eval(zmi)) / (2 * h);
    CMatrix fd_dz = 0.5 * (dx - kI * dy);
    CMatrix fd_dzb = 0.5 * (dx + kI * dy);
    CHECK((fd_dz - table.dz(m).eval(z)).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((fd_dzb - table.dzbar(m).eval(z)).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("map linear part and jacobians") {
  PolyMap map(2, 2);
  map.add_term(0, {1, 0}, {0, 0}, 2.0);              // 2 z1
  map.add_term(0, {0, 0}, {0, 1}, Complex(0, 1));    // i conj(z2)
  map.add_term(1, {0, 1}, {0, 0}, 1.0);              // z2
  map.add_term(1, {0, 0}, {2, 0}, 0.5);              // 0.5 conj(z1)^2

  CMatrix b, c;
  CVector constant;
  map.linear_part(b, c, constant);
  CHECK(std::abs(b(0, 0) - 2.0) < 1e-15);
  CHECK(std::abs(c(0, 1) - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(b(1, 1) - 1.0) < 1e-15);
  CHECK(constant.norm() < 1e-15);

  CVector z(2);
  z << Complex(0.3, 0.2), Complex(-0.1, 0.4);
  CMatrix jzb = map.jacobian_zbar(z);
  CHECK(std::abs(jzb(1, 0) - std::conj(z[0])) < 1e-15);
  CHECK(std::abs(jzb(0, 1) - Complex(0, 1)) < 1e-15);
}
