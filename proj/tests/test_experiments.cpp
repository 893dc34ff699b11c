#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "lightcone/experiments.hpp"
#include "lightcone/verify.hpp"

using namespace lightcone;

TEST_CASE("bernstein scan of the counterexample family") {
  const GraphFunction ce = counterexample_surface(-0.5);
  const ScanReport report = scan_bernstein(ce, {1.0, 2.0, 3.0});

  REQUIRE(report.inf_gauss.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    const double expect =
        0.25 * (1 - std::pow(std::cosh(report.radii[k]), 4));
    CHECK(report.inf_gauss[k] == doctest::Approx(expect).epsilon(5e-3));
  }
  CHECK(report.inf_gauss[2] == doctest::Approx(-2568.1).epsilon(5e-3));
  CHECK(report.diverging);
  CHECK(report.mean_h == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(report.stddev_h <= 1e-9);

  // inf_K is non-increasing in the radius.
  CHECK(report.inf_gauss[1] <= report.inf_gauss[0]);
  CHECK(report.inf_gauss[2] <= report.inf_gauss[1]);
}

TEST_CASE("bernstein scan of horosphere and sphere") {
  const ScanReport flat = scan_bernstein(
      GraphFunction::analytic_expr(parse("1", ExprMode::Real)), {1.0, 2.0, 3.0});
  for (double inf : flat.inf_gauss) CHECK(inf == doctest::Approx(0.0));
  CHECK_FALSE(flat.diverging);

  // Umbilic sphere: K = H^2 at every point, every radius.
  const ScanReport sphere =
      scan_bernstein(sphere_graph(-0.5), {1.0, 10.0, 100.0});
  for (double inf : sphere.inf_gauss) {
    CHECK(inf == doctest::Approx(0.25).epsilon(1e-10));
  }
  CHECK_FALSE(sphere.diverging);

  CHECK_THROWS_AS(scan_bernstein(sphere_graph(-0.5), {2.0, 1.0}), Error);
  CHECK_THROWS_AS(scan_bernstein(sphere_graph(-0.5), {}), Error);
}

TEST_CASE("value distribution of the ZMC curvature") {
  // Moebius data: K = 0 everywhere.
  const DistributionReport mob = value_distribution(
      parse("(2*z+1)/(z+2)", ExprMode::Complex), Grid{-1, 1, -1, 1, 21, 21});
  CHECK(mob.all_zero);

  // g = e^z on u in [-2, 4]: K = -(1/4) e^{-4u}, spanning many decades.
  const DistributionReport expo = value_distribution(
      parse("exp(z)", ExprMode::Complex), Grid{-2, 4, -2, 2, 61, 41});
  CHECK(expo.min == doctest::Approx(-0.25 * std::exp(8.0)).epsilon(1e-9));
  CHECK(expo.max == doctest::Approx(-0.25 * std::exp(-16.0)).epsilon(1e-9));
  CHECK(std::abs(expo.min) / std::abs(expo.max) >= 1e6);
  CHECK_FALSE(expo.all_zero);
  for (int d = 1; d < 9; ++d) {
    CHECK(expo.deciles[d] >= expo.deciles[d - 1]);
  }

  // g = z^2 away from the critical point: strictly negative curvature.
  const DistributionReport sq = value_distribution(
      parse("z^2", ExprMode::Complex), Grid{0.5, 2, -1, 1, 21, 21});
  CHECK(sq.max < 0.0);
}

TEST_CASE("projection report for sphere and horosphere") {
  // Sphere: injective rays, near-total bin coverage, puncture attained.
  const ProjectionReport sphere =
      projection_check(sphere_graph(-2.0), Grid{-50, 50, -50, 50, 101, 101},
                       true);
  CHECK(sphere.samples >= 101u * 101u);
  CHECK(sphere.duplicate_rays == 0);
  CHECK(sphere.injective);
  CHECK(sphere.bins_hit >= 398);
  CHECK(sphere.bins_total == 400);
  CHECK(sphere.verdict == "surjective");

  // Horosphere: same ray formula but the puncture is provably missed.
  const ProjectionReport horo =
      projection_check(horosphere_graph(), Grid{-20, 20, -20, 20, 41, 41},
                       false);
  CHECK(horo.injective);
  CHECK(horo.verdict == "non-surjective");

  // Unknown sections report coverage only.
  const ProjectionReport unknown = projection_check(
      sphere_graph(-2.0), Grid{-50, 50, -50, 50, 41, 41}, std::nullopt);
  CHECK(unknown.verdict.substr(0, 8) == "coverage");
}

TEST_CASE("mesh generation") {
  // cosh(u) over a 41x41 grid: full vertex and triangle count.
  MeshSpec spec;
  spec.model = MeshModel::HalfSpace;
  spec.grid = Grid{-2, 2, -2, 2, 41, 41};
  spec.source = SourceTau{parse("cosh(u)", ExprMode::Real)};
  const Mesh mesh = build_mesh(spec);
  CHECK(mesh.vertices.size() == 1681);
  CHECK(mesh.triangles.size() == 3200);

  // Horosphere in the half-space model: every vertex has t = 1.
  spec.source = SourceBuiltin{BuiltinSurface::Horosphere, 0.0};
  for (const auto& v : build_mesh(spec).vertices) {
    CHECK(v[2] == doctest::Approx(1.0));
  }

  // Sphere in the ball model: strictly inside the unit ball.
  spec.model = MeshModel::Ball;
  spec.source = SourceBuiltin{BuiltinSurface::Sphere, -2.0};
  for (const auto& v : build_mesh(spec).vertices) {
    CHECK(std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]) < 1.0 - 1e-9);
  }

  // Partial domains drop outside vertices and their quads.
  spec.model = MeshModel::HalfSpace;
  spec.source = SourceBuiltin{BuiltinSurface::StandardHypersphere, 0.0};
  spec.grid = Grid{-2, 2, -2, 2, 9, 9};
  const Mesh partial = build_mesh(spec);
  CHECK(partial.vertices.size() < 81);
  for (const auto& v : partial.vertices) CHECK(v[0] > 0.0);
  for (const auto& f : partial.triangles) {
    for (int corner : f) {
      CHECK(corner >= 0);
      CHECK(corner < static_cast<int>(partial.vertices.size()));
    }
  }

  // Deterministic output for a fixed spec.
  std::ostringstream once, twice;
  spec.source = SourceBuiltin{BuiltinSurface::Counterexample, -0.5};
  write_obj(build_mesh(spec), once);
  write_obj(build_mesh(spec), twice);
  CHECK(once.str() == twice.str());
  CHECK(once.str().substr(0, 2) == "v ");
}

TEST_CASE("graph sources resolve") {
  const Grid grid{-0.5, 0.5, -0.5, 0.5, 5, 5};
  const GraphFunction neg =
      graph_from_source(SourceG{parse("z", ExprMode::Complex), -0.5}, grid);
  CHECK(neg.value(0.0, 0.0) == doctest::Approx(0.5));

  const GraphFunction zmc =
      graph_from_source(SourceG{parse("exp(z)", ExprMode::Complex), 0.0}, grid);
  CHECK(zmc.value(0.2, 0.0) == doctest::Approx(std::exp(-0.2)));

  const GraphFunction plane =
      graph_from_source(SourcePlane{{1, 1, 0, 0}}, grid);
  CHECK(plane.value(1.0, 1.0) == doctest::Approx(3.0));

  CHECK(source_attains_puncture(SourcePlane{{1, 1, 0, 0}}).value());
  CHECK_FALSE(source_attains_puncture(SourceBuiltin{BuiltinSurface::Horosphere, 0.0}).value());
  CHECK(source_attains_puncture(SourceBuiltin{BuiltinSurface::Sphere, -2.0}).value());
  CHECK_FALSE(source_attains_puncture(SourceTau{parse("1", ExprMode::Real)}).has_value());
}

TEST_CASE("verify suites all pass") {
  for (const char* suite : {"core", "jets"}) {
    const std::vector<CheckResult> results = verify_suite(suite);
    CHECK(all_passed(results));
    CHECK_FALSE(results.empty());
  }
  CHECK_THROWS_AS(verify_suite("bogus"), Error);
}
