#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lightcone/classify.hpp"

using namespace lightcone;

TEST_CASE("causal type of the hyperplane normal") {
  const CausalClass sphere = normal_causal_type({1, 1, 0, 0});
  CHECK(sphere.norm == doctest::Approx(-4.0));
  CHECK(sphere.type == CausalType::Spacelike);

  const CausalClass light = normal_causal_type({0, 1, 0, 0});
  CHECK(light.norm == doctest::Approx(0.0));
  CHECK(light.type == CausalType::Lightlike);

  const CausalClass time = normal_causal_type({0, 0, 1, 0});
  CHECK(time.norm == doctest::Approx(1.0));
  CHECK(time.type == CausalType::Timelike);
}

TEST_CASE("the five worked classifications") {
  const SectionClass s1 = classify({1, 1, 0, 0});
  CHECK(s1.kind == SectionKind::Sphere);
  CHECK(s1.subcase == SectionSubcase::SI);
  CHECK(s1.entire);
  CHECK(s1.mean_curvature == doctest::Approx(-2.0));

  const SectionClass s2 = classify({0, 1, 0, 0});
  CHECK(s2.kind == SectionKind::Horosphere);
  CHECK(s2.subcase == SectionSubcase::LI);
  CHECK(s2.entire);
  CHECK(s2.mean_curvature == doctest::Approx(0.0));

  const SectionClass s3 = classify({0, 0, 1, 0});
  CHECK(s3.kind == SectionKind::Hypersphere);
  CHECK(s3.subcase == SectionSubcase::TI);
  CHECK_FALSE(s3.entire);
  CHECK(s3.mean_curvature == doctest::Approx(0.5));

  const SectionClass s4 = classify({1, 0.25, 1, 0});
  CHECK(s4.kind == SectionKind::Horosphere);
  CHECK(s4.subcase == SectionSubcase::LII);
  CHECK_FALSE(s4.entire);
  CHECK(s4.mean_curvature == doctest::Approx(0.0));

  const SectionClass s5 = classify({-1, 0, 0, 0});
  CHECK(s5.kind == SectionKind::Empty);
  CHECK(s5.subcase == SectionSubcase::None);
  CHECK_FALSE(s5.entire);
  CHECK(std::isnan(s5.mean_curvature));
}

TEST_CASE("remaining subcases") {
  CHECK(classify({1, -1, 0, 0}).subcase == SectionSubcase::TII);
  CHECK(classify({-1, 1, 0, 0}).subcase == SectionSubcase::TIII);
  CHECK(classify({-1, -1, 0, 0}).kind == SectionKind::Empty);
  CHECK(classify({0, -2, 0, 0}).kind == SectionKind::Empty);
  CHECK(classify({0, -2, 1, 1}).subcase == SectionSubcase::TI);

  // The L-ii equality stratum has a 1e-12 band scaled by max(1, |b|).
  CHECK(classify({1, 0.25 + 1e-15, 1, 0}).subcase == SectionSubcase::LII);
  CHECK(classify({1, 0.25 + 1e-7, 1, 0}).subcase == SectionSubcase::SI);
  CHECK(classify({1, 0.25 - 1e-7, 1, 0}).subcase == SectionSubcase::TII);
}

TEST_CASE("section graphs carry the closed-form curvature") {
  // (1,1,0,0): tau = u^2 + v^2 + 1, H = -2 everywhere.
  const GraphFunction sphere = section_graph({1, 1, 0, 0});
  for (double u : {0.0, 1.5, -2.0}) {
    CHECK(sphere.value(u, 0.5) == doctest::Approx(u * u + 1.25));
    CHECK(curvature_data(sphere, u, 0.5).mean == doctest::Approx(-2.0).epsilon(1e-12));
  }
  const Grid grid{-2, 2, -2, 2, 9, 9};
  CHECK(umbilicity_deviation(sphere, grid) <= 1e-9);

  // (0,1,0,0): the standard horosphere.
  const GraphFunction horo = section_graph({0, 1, 0, 0});
  CHECK(horo.value(3.0, -4.0) == doctest::Approx(1.0));
  CHECK(curvature_data(horo, 3.0, -4.0).mean == doctest::Approx(0.0));

  // (0,0,1,0): tau = u on the half plane u > 0, H = 1/2.
  const GraphFunction half = section_graph({0, 0, 1, 0});
  CHECK(half.value(2.0, 7.0) == doctest::Approx(2.0));
  CHECK(curvature_data(half, 2.0, 7.0).mean == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_FALSE(half.contains(-1.0, 0.0));

  try {
    section_graph({-1, 0, 0, 0});
    FAIL("expected EmptySection");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::EmptySection);
  }
}

TEST_CASE("vertex limit of sections with a > 0") {
  // (1,1,0,0) at R = 1000 is within 1e-3 of [[1,0],[0,0]].
  const Herm2 limit1{1.0, Complex(0.0), 0.0};
  const LightconePoint far1 = vertex_limit_check({1, 1, 0, 0}, 1000.0);
  CHECK(entry_distance(far1.herm(), limit1) <= 1e-3);

  const Herm2 limit2{0.5, Complex(0.0), 0.0};
  const LightconePoint far2 = vertex_limit_check({2, 1, 0, 0}, 1000.0);
  CHECK(entry_distance(far2.herm(), limit2) <= 1e-3);

  // Convergence is monotone over R = 10, 100, 1000 (any direction).
  for (double theta : {0.0, 1.1}) {
    double prev = 1e300;
    for (double radius : {10.0, 100.0, 1000.0}) {
      const double d = entry_distance(
          vertex_limit_check({1, 1, 0.5, -0.3}, radius, theta).herm(), limit1);
      CHECK(d < prev);
      prev = d;
    }
  }

  CHECK_THROWS_AS(vertex_limit_check({0, 1, 0, 0}, 10.0), Error);
  CHECK_THROWS_AS(vertex_limit_check({-1, 1, 0, 0}, 10.0), Error);
}

TEST_CASE("random sections: positivity scan and curvature consistency") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> c(-3.0, 3.0);
  const int scan_n = 41;
  for (int trial = 0; trial < 1000; ++trial) {
    const HyperplaneCoeffs h{c(rng), c(rng), c(rng), c(rng)};
    const SectionClass cls = classify(h);

    bool any_positive = false, all_positive = true;
    for (int j = 0; j < scan_n; ++j) {
      for (int i = 0; i < scan_n; ++i) {
        const double u = -50.0 + 100.0 * i / (scan_n - 1);
        const double v = -50.0 + 100.0 * j / (scan_n - 1);
        const double t = h.a * (u * u + v * v) + h.b + h.c * u + h.d * v;
        if (t > 0) {
          any_positive = true;
        } else {
          all_positive = false;
        }
      }
    }
    if (cls.kind == SectionKind::Empty) {
      CHECK_FALSE(any_positive);
      continue;
    }
    if (cls.entire) CHECK(all_positive);
    CHECK(((cls.kind == SectionKind::Sphere && cls.mean_curvature < 0) ||
           (cls.kind == SectionKind::Horosphere &&
            std::abs(cls.mean_curvature) <= 1e-9) ||
           (cls.kind == SectionKind::Hypersphere && cls.mean_curvature > 0)));
    if (cls.entire) CHECK(cls.mean_curvature <= 1e-12);
  }
}

TEST_CASE("enum names") {
  CHECK(std::string(to_string(SectionKind::Sphere)) == "sphere");
  CHECK(std::string(to_string(SectionSubcase::LII)) == "L-ii");
  CHECK(std::string(to_string(SectionSubcase::None)) == "none");
}
