#include "visicone/visibility.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "testutil.hpp"
#include "visicone/errors.hpp"
#include "visicone/suites.hpp"

using namespace visicone;
using test::close;

namespace {

const Polytope kSquare({Vector{0, 0}, Vector{1, 0}, Vector{1, 1}, Vector{0, 1}});
const Body kSquareBody(kSquare);
const Body kCone = DiskCone{};
const Vector kOrigin3 = Vector::zero(3);

}  // namespace

TEST_CASE("lambda_max degenerate and closed-form cases") {
  const Vector inside{0.5, 0.5};
  CHECK(lambda_max(kSquareBody, inside, inside) == 1.0);

  CHECK(close(lambda_max(kCone, kOrigin3, Vector{2, 0, 0}), 0.5, 1e-9));
  CHECK(lambda_max(kCone, kOrigin3, Vector{2, 1, 1}) <= 1e-9);

  CHECK_THROWS_AS(lambda_max(kCone, kOrigin3, Vector{0.5, 0, 0}), NotInBody);
}

TEST_CASE("is_visible on the disk cone") {
  VisibilityCertificate arc = is_visible(kCone, kOrigin3, Vector{2, 1, 1});
  CHECK(arc.visible);
  CHECK_FALSE(arc.blocker.has_value());

  VisibilityCertificate limit = is_visible(kCone, kOrigin3, Vector{2, 0, 0});
  CHECK_FALSE(limit.visible);
  CHECK(close(limit.lambda_star, 0.5, 1e-9));
  REQUIRE(limit.blocker.has_value());
  CHECK(close(*limit.blocker, Vector{1, 0, 0}, 1e-9));
  CHECK(contains(kCone, *limit.blocker, 1e-8));
}

TEST_CASE("is_visible is reflexive for members") {
  const Vector inside{0.25, 0.75};
  VisibilityCertificate cert = is_visible(kSquareBody, inside, inside);
  CHECK(cert.visible);

  // A different member is blocked when the viewpoint is inside.
  VisibilityCertificate other =
      is_visible(kSquareBody, inside, Vector{1.0, 0.75});
  CHECK_FALSE(other.visible);
  CHECK(other.lambda_star == 1.0);
}

TEST_CASE("is_visible cross-checks the cone route on polytopes") {
  VisibilityCertificate vis =
      is_visible(kSquareBody, Vector{2, 0.5}, Vector{1, 0.5});
  CHECK(vis.visible);
  CHECK(vis.method == VisibilityMethod::kConeTest);

  VisibilityCertificate blocked =
      is_visible(kSquareBody, Vector{2, 0.5}, Vector{0, 0.5});
  CHECK_FALSE(blocked.visible);
  CHECK(close(blocked.lambda_star, 0.5, 1e-9));
  REQUIRE(blocked.blocker.has_value());
  CHECK(close(*blocked.blocker, Vector{1.0, 0.5}, 1e-9));
}

TEST_CASE("raycast lands on the facing facet") {
  RaycastResult hit = raycast_hit(kSquareBody, Vector{2, 0.5}, Vector{0, 0.5});
  CHECK(close(hit.point, Vector{1, 0.5}, 1e-9));
  CHECK(close(hit.lambda0, 0.5, 1e-9));

  // Already-visible target: the cast is a no-op.
  CHECK(close(raycast_visible(kSquareBody, Vector{2, 0.5}, Vector{1, 0.5}),
              Vector{1, 0.5}, 1e-9));

  // Viewpoint inside the body sees only itself.
  CHECK(close(raycast_visible(kSquareBody, Vector{0.5, 0.5}, Vector{0, 0}),
              Vector{0.5, 0.5}));

  CHECK_THROWS_AS(raycast_hit(kSquareBody, Vector{2, 0.5}, Vector{3, 3}),
                  NotInBody);
}

TEST_CASE("translated-cone membership on the square") {
  CHECK_FALSE(in_translated_cone(kSquare, Vector{1, 0.5}, Vector{2, 0.5}));
  CHECK(in_translated_cone(kSquare, Vector{0, 0.5}, Vector{2, 0.5}));
  CHECK_THROWS_AS(in_translated_cone(kSquare, Vector{5, 5}, Vector{2, 0.5}),
                  NotInBody);

  // Every hull member lies in every vertex cone.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Vector y{unif(rng), unif(rng)};
    for (const Vector& v : kSquare.vertices) {
      CHECK(in_translated_cone(kSquare, v, y));
    }
  }
}

TEST_CASE("membership by cone intersection") {
  CHECK(member_by_cone_intersection(kSquare, Vector{0.5, 0.5}));
  CHECK_FALSE(member_by_cone_intersection(kSquare, Vector{2.0, 0.5}));

  const Polytope tri({Vector{0, 0}, Vector{1, 0}, Vector{0, 1}});
  CHECK(member_by_cone_intersection(tri, Vector{0.5, 0.5}));  // edge point
}

TEST_CASE("sample_visible basics") {
  CHECK(sample_visible(kCone, kOrigin3, 0, 1).empty());

  // A member viewpoint sees only itself.
  const Vector inside{0.5, 0.5};
  for (const Vector& v : sample_visible(kSquareBody, inside, 5, 3)) {
    CHECK(close(v, inside));
  }

  const auto samples = sample_visible(kCone, kOrigin3, 64, 7);
  REQUIRE(samples.size() == 64);
  for (const Vector& v : samples) {
    CHECK(v[0] >= 1.0 - 1e-9);
    CHECK(is_visible(kCone, kOrigin3, v).visible);
  }

  CHECK_THROWS_AS(
      sample_visible(Body(Segment(Vector{0, 0}, Vector{1, 0})), Vector{2, 2},
                     4, 1),
      UnsupportedBody);
}

TEST_CASE("separation certificate for the square") {
  SeparationCertificate cert =
      separate_segment(kSquare, Vector{3, 0.5}, Vector{2, 0.5});
  CHECK(close(cert.normal, Vector{-1, 0}, 1e-9));
  CHECK(close(cert.gap, 1.0, 1e-9));
  CHECK(close(cert.offset, -1.5, 1e-9));

  // Certificate margins against the vertices and endpoints.
  for (const Vector& v : kSquare.vertices) {
    CHECK(dot(cert.normal, v) >= cert.offset + 0.5 * cert.gap - 1e-9);
  }
  CHECK(dot(cert.normal, Vector{3, 0.5}) <= cert.offset - 0.5 * cert.gap + 1e-9);
  CHECK(dot(cert.normal, Vector{2, 0.5}) <= cert.offset - 0.5 * cert.gap + 1e-9);

  CHECK(argmax_on_segment(cert, Vector{3, 0.5}, Vector{2, 0.5}) ==
        SegmentEnd::kY);
}

TEST_CASE("separation rejects touching segments") {
  CHECK_THROWS_AS(separate_segment(kSquare, Vector{2, 0.5}, Vector{1, 0.5}),
                  NotDisjoint);
  CHECK_THROWS_AS(separate_segment(kSquare, Vector{2, 0.5}, Vector{0.5, 0.5}),
                  NotDisjoint);
}

TEST_CASE("degenerate segments separate like points") {
  SeparationCertificate cert =
      separate_segment(kSquare, Vector{3, 0.5}, Vector{3, 0.5});
  CHECK(close(cert.normal, Vector{-2, 0}, 1e-9));
  CHECK(close(cert.gap, 4.0, 1e-9));
  CHECK(argmax_on_segment(cert, Vector{3, 0.5}, Vector{3, 0.5}) ==
        SegmentEnd::kBoth);
}

TEST_CASE("argmax tag covers both endpoints and ties") {
  SeparationCertificate cert;
  cert.normal = Vector{1, 0};
  CHECK(argmax_on_segment(cert, Vector{0, 0}, Vector{1, 0}) == SegmentEnd::kY);
  CHECK(argmax_on_segment(cert, Vector{1, 0}, Vector{0, 0}) == SegmentEnd::kX);
  CHECK(argmax_on_segment(cert, Vector{0, 0}, Vector{0, 5}) ==
        SegmentEnd::kBoth);
}

TEST_CASE("visibility property suites at unit-test scale") {
  SuiteResult witness = suite_disk_cone_witness(100);
  INFO(witness.detail);
  CHECK(witness.pass);

  SuiteResult agree = suite_cone_scan_agreement(150, 401);
  INFO(agree.detail);
  CHECK(agree.pass);

  SuiteResult cones = suite_cone_intersection_membership(10, 20, 402);
  INFO(cones.detail);
  CHECK(cones.pass);

  SuiteResult shift = suite_translation_invariance(60, 403);
  INFO(shift.detail);
  CHECK(shift.pass);

  SuiteResult sep = suite_segment_separation(60, 404);
  INFO(sep.detail);
  CHECK(sep.pass);

  SuiteResult support = suite_projected_support_visibility(60, 405);
  INFO(support.detail);
  CHECK(support.pass);

  SuiteResult flats = suite_flat_full_visibility(20, 20, 406);
  INFO(flats.detail);
  CHECK(flats.pass);

  SuiteResult rays = suite_ray_boundary_witness(90, 407);
  INFO(rays.detail);
  CHECK(rays.pass);

  SuiteResult combos = suite_proper_combination_visibility(60, 408);
  INFO(combos.detail);
  CHECK(combos.pass);

  SuiteResult deterministic = suite_sample_determinism(409);
  INFO(deterministic.detail);
  CHECK(deterministic.pass);

  SuiteResult bound = suite_visible_distance_bound(20, 410);
  INFO(bound.detail);
  CHECK(bound.pass);
}
