#include <doctest.h>

#include "acx/errors.hpp"
#include "acx/model.hpp"
#include "acx/rng.hpp"

using namespace acx;

static ModelStructure simple_model(Complex a) {
  ModelStructure m;
  m.n = 2;
  m.mu = CMatrix::Zero(1, 1);
  m.mu(0, 0) = a;
  return m;
}

TEST_CASE("model chart carries -mu in the last row") {
  auto chart = model_chart(simple_model(Complex(0.7, -0.2)), 0.5);
  CVector w(2);
  w << Complex(0.2, 0.3), Complex(-0.1, 0.1);
  CMatrix a = chart.a(w);
  CHECK(std::abs(a(0, 0)) < 1e-15);
  CHECK(std::abs(a(0, 1)) < 1e-15);
  CHECK(std::abs(a(1, 1)) < 1e-15);
  CHECK(std::abs(a(1, 0) - (-Complex(0.7, -0.2) * std::conj(w[0]))) < 1e-15);
}

TEST_CASE("mu = 0 gives the standard structure") {
  auto chart = model_chart(simple_model(0.0), 1.0);
  CVector w(2);
  w << Complex(0.5, 0.2), Complex(0.1, -0.4);
  CHECK(spectral_norm(chart.a(w)) < 1e-15);
}

TEST_CASE("oversized radius is rejected") {
  CHECK_THROWS_AS(model_chart(simple_model(2.0), 1.0), NormTooLarge);
}

TEST_CASE("nonisotropic dilations are automorphisms of the model") {
  auto chart = model_chart(simple_model(Complex(0.4, 0.3)), 1.5);
  for (double lambda : {0.1, 0.5, 2.0, 10.0}) {
    auto pushed = dilate_chart(chart, lambda, DilationMode::Nonisotropic);
    Rng rng(17);
    for (int i = 0; i < 15; ++i) {
      CVector w = 0.1 * rng.next_unit_vector(2);
      CHECK(spectral_norm(pushed.a(w) - chart.a(w)) < 1e-12);
    }
  }
}

TEST_CASE("isotropic dilation shrinks a vanishing-at-zero chart") {
  PolyMatrix table(2, 2, 2);
  table.add_term(0, 1, {1, 0}, {0, 0}, Complex(0.3, 0.1));
  table.add_term(1, 0, {0, 0}, {0, 1}, Complex(-0.2, 0.25));
  AlmostComplexChart chart(table, 4.0);
  double prev = 1e9;
  for (int k = 0; k <= 4; ++k) {
    double lambda = std::pow(2.0, -k);
    auto dil = dilate_chart(chart, lambda, DilationMode::Isotropic);
    double worst = 0.0;
    for (const auto& z : ball_samples(2, 1.0, 60, 2))
      worst = std::max(worst, spectral_norm(dil.a(z)));
    CHECK(worst < prev + 1e-14);
    prev = worst;
  }
  CHECK(prev < 0.05);  // sup over the unit ball shrank with lambda
}

TEST_CASE("lambda = 1 keeps the chart, lambda <= 0 is rejected") {
  auto chart = model_chart(simple_model(0.3), 1.0);
  auto same = dilate_chart(chart, 1.0, DilationMode::Nonisotropic);
  CVector w(2);
  w << Complex(0.1, 0.2), Complex(0.3, -0.1);
  CHECK(spectral_norm(same.a(w) - chart.a(w)) < 1e-15);
  CHECK_THROWS_AS(dilate_chart(chart, 0.0, DilationMode::Isotropic), SpecError);
}

TEST_CASE("model limit recovers the homogeneous part") {
  SUBCASE("A == 0 gives mu = 0") {
    auto m = model_limit(AlmostComplexChart::standard(3));
    CHECK(m.mu.cwiseAbs().maxCoeff() < 1e-12);
  }

  SUBCASE("the dilation limit of the extracted model closes the loop") {
    // Normalized chart: A_{2,1} = a conj(z1) + small quadratic noise.
    PolyMatrix table(2, 2, 2);
    Complex a(0.35, -0.2);
    table.add_term(1, 0, {0, 0}, {1, 0}, a);
    table.add_term(1, 0, {1, 0}, {1, 0}, Complex(0.02, 0.01));
    table.add_term(0, 0, {0, 0}, {0, 2}, Complex(0.015, -0.01));
    AlmostComplexChart chart(table, 1.0);
    REQUIRE(is_normalized(chart));

    ModelStructure model = model_limit(chart);
    // Oracle: sup over a compact of |A_lambda - A_0| must go to 0.
    double prev = 1e9;
    for (int k = 2; k <= 10; k += 2) {
      double gap = model_convergence_gap(chart, model, std::pow(2.0, -k), 1.0);
      CHECK(gap < prev + 1e-12);
      prev = gap;
    }
    CHECK(prev < 2e-3);

    // The wrong sign would not converge.
    ModelStructure flipped = model;
    flipped.mu = -model.mu;
    double bad = model_convergence_gap(chart, flipped, std::pow(2.0, -10), 1.0);
    CHECK(bad > 0.3);
  }

  SUBCASE("conj-linear terms in the upper rows scale away") {
    PolyMatrix table(3, 3, 3);
    Complex a(0.3, 0.1);
    table.add_term(2, 0, {0, 0, 0}, {1, 0, 0}, a);           // defines mu
    table.add_term(0, 1, {0, 0, 0}, {0, 1, 0}, Complex(0.05, 0.0));  // scales away
    table.add_term(2, 2, {0, 0, 0}, {1, 0, 0}, Complex(0.05, 0.0));  // scales away
    AlmostComplexChart chart(table, 1.0);
    ModelStructure model = model_limit(chart);
    CHECK(std::abs(model.mu(0, 0) - (-a)) < 1e-9);
    CHECK(std::abs(model.mu(0, 1)) < 1e-9);
    CHECK(std::abs(model.mu(1, 0)) < 1e-9);
    double gap = model_convergence_gap(chart, model, std::pow(2.0, -12), 1.0);
    CHECK(gap < 1e-3);
  }

  SUBCASE("non-normalized charts are rejected") {
    PolyMatrix table(2, 2, 2);
    table.add_term(0, 0, {1, 0}, {0, 0}, Complex(0.3, 0.0));  // z-linear term
    AlmostComplexChart chart(table, 1.0);
    CHECK_THROWS_AS(model_limit(chart), SpecError);
  }
}

TEST_CASE("dimension-2 flattening kills the model matrix") {
  for (Complex a : {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(0.0, 1.0),
                    Complex(0.35, -0.6)}) {
    ModelStructure m = simple_model(a);
    ChartTransformation tf = dim2_flatten(m);
    if (a == Complex(0.0, 0.0)) {
      CVector z(2);
      z << Complex(0.2, 0.1), Complex(-0.1, 0.3);
      CHECK((tf.forward(z) - z).norm() < 1e-14);
      continue;
    }
    auto chart = model_chart(m, 0.3 / std::max(1.0, std::abs(a)));
    auto flattened = pushforward(chart, tf, chart.radius() * 0.5);
    double worst = 0.0;
    for (const auto& z : ball_samples(2, chart.radius() * 0.4, 30, 9))
      worst = std::max(worst, spectral_norm(flattened.a(tf.forward(z))));
    CHECK(worst < 1e-10);
  }
  CHECK_THROWS_AS(dim2_flatten(ModelStructure{3, CMatrix::Zero(2, 2)}), SpecError);
}
