#include "visicone/projection.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "testutil.hpp"
#include "visicone/errors.hpp"
#include "visicone/suites.hpp"

using namespace visicone;
using test::close;

namespace {

const Segment kUnitSeg(Vector{0, 0}, Vector{1, 0});
const Simplex kTriangle({Vector{0, 0}, Vector{1, 0}, Vector{0, 1}});

}  // namespace

TEST_CASE("segment projection clamps the line coefficient") {
  ProjectionResult at_end = project_segment(kUnitSeg, Vector{0, 0});
  CHECK(close(at_end.point, Vector{0, 0}));
  CHECK(close(at_end.distance, 0.0));

  ProjectionResult clamped = project_segment(kUnitSeg, Vector{2, 5});
  CHECK(close(clamped.point, Vector{1, 0}));
  CHECK(close(clamped.distance, std::sqrt(26.0), 1e-12));

  ProjectionResult interior = project_segment(kUnitSeg, Vector{0.3, 7});
  CHECK(close(interior.point, Vector{0.3, 0.0}));
  CHECK(close(interior.distance, 7.0, 1e-12));

  // Nearest-point inequality against both endpoints.
  for (const Vector& x : {Vector{2, 5}, Vector{0.3, 7}, Vector{-4, -1}}) {
    const Vector p = project_segment(kUnitSeg, x).point;
    CHECK(dot(x - p, kUnitSeg.a - p) <= 1e-10);
    CHECK(dot(x - p, kUnitSeg.b - p) <= 1e-10);
  }
}

TEST_CASE("segment projection against a fine line scan") {
  const Vector x{2, 5};
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 10000; ++k) {
    const double t = k / 10000.0;
    best = std::min(best, distance(Vector{t, 0.0}, x));
  }
  CHECK(close(project_segment(kUnitSeg, x).distance, best, 1e-4));
}

TEST_CASE("affine projection solves the normal equations") {
  const AffineFlat axis(Vector{0, 0}, {Vector{1, 0}});
  ProjectionResult r = project_affine(axis, Vector{2, 3});
  CHECK(close(r.point, Vector{2, 0}));
  CHECK(close(r.distance, 3.0));

  // Membership is a fixed point.
  const AffineFlat plane(Vector{1, 0, 0}, {Vector{0, 1, 0}, Vector{0, 0, 1}});
  const Vector inside = Vector{1.0, -2.5, 4.0};
  CHECK(close(project_affine(plane, inside).point, inside, 1e-10));

  // Residual orthogonal to every direction.
  ProjectionResult q = project_affine(plane, Vector{3, 1, 1});
  for (const Vector& d : plane.directions) {
    CHECK(std::abs(dot(Vector{3, 1, 1} - q.point, d)) <= 1e-9);
  }

  const AffineFlat point_flat(Vector{5, 5}, {});
  CHECK(close(project_affine(point_flat, Vector{0, 0}).point, Vector{5, 5}));
}

TEST_CASE("simplex projection on the reference triangle") {
  ProjectionResult inside = project_simplex(kTriangle, Vector{0.2, 0.2});
  CHECK(close(inside.point, Vector{0.2, 0.2}, 1e-12));
  CHECK(close(inside.distance, 0.0, 1e-12));
  CHECK(inside.facet_chain.empty());

  ProjectionResult edge = project_simplex(kTriangle, Vector{1, 1});
  CHECK(close(edge.point, Vector{0.5, 0.5}, 1e-12));
  CHECK(close(edge.distance, std::sqrt(2.0) / 2.0, 1e-12));
  CHECK(edge.facet_chain == std::vector<std::size_t>{0});
  CHECK(close(edge.weights[1], 0.5, 1e-12));
  CHECK(close(edge.weights[2], 0.5, 1e-12));

  ProjectionResult corner = project_simplex(kTriangle, Vector{-1, -1});
  CHECK(close(corner.point, Vector{0, 0}, 1e-12));
  CHECK(close(corner.distance, std::sqrt(2.0), 1e-12));
  CHECK(close(corner.weights[0], 1.0, 1e-12));
}

TEST_CASE("simplex projection reports distance consistent with its point") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t d = n + trial % 3;
    std::vector<Vector> vs;
    do {
      vs.clear();
      for (std::size_t i = 0; i <= n; ++i) {
        vs.push_back(test::random_point(rng, d, 1.0));
      }
    } while (!is_affinely_independent(vs));
    const Simplex s(vs);
    const Vector x = test::random_point(rng, d, 2.0);
    const ProjectionResult r = project_simplex(s, x);
    CHECK(std::abs(r.distance - distance(x, r.point)) <=
          1e-12 * (1.0 + r.distance));

    double sum = 0.0;
    Vector recombined = Vector::zero(d);
    for (std::size_t i = 0; i <= n; ++i) {
      sum += r.weights[i];
      for (std::size_t c = 0; c < d; ++c) {
        recombined[c] += r.weights[i] * vs[i][c];
      }
    }
    CHECK(close(sum, 1.0, 1e-10));
    CHECK(close(recombined, r.point, 1e-9));
  }
}

TEST_CASE("polytope projection agrees with the simplex path on simplices") {
  const Polytope p(kTriangle.vertices);
  for (const Vector& x : {Vector{1, 1}, Vector{-1, -1}, Vector{0.2, 0.1}}) {
    CHECK(close(project_polytope(p, x).point,
                project_simplex(kTriangle, x).point, 1e-10));
  }
}

TEST_CASE("polytope projection on the square and a 17-gon") {
  const Polytope square(
      {Vector{0, 0}, Vector{1, 0}, Vector{1, 1}, Vector{0, 1}});
  ProjectionResult r = project_polytope(square, Vector{2.0, 0.5});
  CHECK(close(r.point, Vector{1.0, 0.5}, 1e-12));
  CHECK(close(r.distance, 1.0, 1e-12));

  std::vector<Vector> gon;
  for (int k = 0; k < 17; ++k) {
    const double a = 2.0 * std::numbers::pi * k / 17.0;
    gon.push_back(Vector{std::cos(a), std::sin(a)});
  }
  const Polytope poly(gon);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const Vector x = test::random_point(rng, 2, 3.0);
    CHECK(distance(project_polytope(poly, x).point,
                   min_norm_oracle(poly, x).point) <= 1e-6);
  }
}

TEST_CASE("polytope projection honors the subset budget") {
  std::vector<Vector> many;
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) many.push_back(test::random_point(rng, 4, 1.0));
  const Polytope p(many);
  CHECK_THROWS_AS(project_polytope(p, Vector::zero(4), 100),
                  SubsetBudgetExceeded);

  setenv("VISICONE_MAX_SUBSETS", "50", 1);
  CHECK(default_subset_budget() == 50);
  unsetenv("VISICONE_MAX_SUBSETS");
  CHECK(default_subset_budget() == (std::size_t{1} << 20));
}

TEST_CASE("min-norm oracle basics") {
  const Vector v{4.0, 1.0};
  ProjectionResult single = min_norm_oracle(Polytope({v}), Vector{0, 0});
  CHECK(close(single.point, v));
  CHECK(close(single.distance, norm(v), 1e-12));

  const Polytope square(
      {Vector{0, 0}, Vector{1, 0}, Vector{1, 1}, Vector{0, 1}});
  ProjectionResult inside = min_norm_oracle(square, Vector{0.7, 0.3});
  CHECK(inside.distance <= 1e-10);

  ProjectionResult tri = min_norm_oracle(Polytope(kTriangle.vertices),
                                         Vector{1, 1});
  CHECK(close(tri.point, Vector{0.5, 0.5}, 1e-10));
}

TEST_CASE("min-norm oracle satisfies the nearest-point inequality") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + trial % 4;
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < d + 3; ++i) {
      vs.push_back(test::random_point(rng, d, 1.0));
    }
    const Polytope p(vs);
    const Vector x = test::random_point(rng, d, 2.5);
    const ProjectionResult r = min_norm_oracle(p, x);
    for (const Vector& v : p.vertices) {
      CHECK(dot(x - r.point, v - r.point) <= 1e-8 * (1.0 + norm_sq(x)));
    }
  }
}

TEST_CASE("projection property suites at unit-test scale") {
  for (const SuiteResult& r : suite_projection_battery(60, 301)) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.pass);
  }
  SuiteResult idem = suite_projection_idempotence(80, 302);
  INFO(idem.detail);
  CHECK(idem.pass);
  SuiteResult nonexp = suite_projection_nonexpansive(80, 303);
  INFO(nonexp.detail);
  CHECK(nonexp.pass);
  SuiteResult tri = suite_triangle_edge_consistency(80, 304);
  INFO(tri.detail);
  CHECK(tri.pass);
}
