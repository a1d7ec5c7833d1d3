#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace visicone {

/// Outcome of one property suite: how many checks ran, how many failed,
/// and a note describing the first failure (empty when green).
struct SuiteResult {
  std::string name;
  bool pass = false;
  long checked = 0;
  long failed = 0;
  std::string detail;
};

/// Fixed numeric reproduction of the disk-cone witness: every ray toward
/// the open arc is visible, the arc's limit direction is blocked at
/// lambda* = 1/2, and (1.5, 0, 0) is a member.
SuiteResult suite_disk_cone_witness(int grid_points);

/// Random-simplex projection battery. Returns four results:
/// oracle agreement (min-norm + budgeted lattice), variational inequality,
/// reduction identity, and visibility of the projected point.
std::vector<SuiteResult> suite_projection_battery(int instances,
                                                  std::uint64_t seed);

/// Lambda-scan visibility against translated-cone membership on random
/// polytope triples; the two routes must always agree.
SuiteResult suite_cone_scan_agreement(int triples, std::uint64_t seed);

/// Vertex-cone intersection membership against the hull membership oracle,
/// excluding points within 1e-6 of the boundary.
SuiteResult suite_cone_intersection_membership(int polytopes, int points_per,
                                               std::uint64_t seed);

/// Visibility verdicts and lambda* are invariant under joint translation.
SuiteResult suite_translation_invariance(int count, std::uint64_t seed);

/// Separation certificates exist for segments toward visible points, and
/// the functional peaks at the segment end closest to the body.
SuiteResult suite_segment_separation(int count, std::uint64_t seed);

/// Every vertex with positive weight in a simplex projection is itself
/// visible from the query point.
SuiteResult suite_projected_support_visibility(int count, std::uint64_t seed);

/// Affine flats are entirely visible from any point off them: every ray
/// cast lands on its target.
SuiteResult suite_flat_full_visibility(int flats, int samples_per,
                                       std::uint64_t seed);

/// project(project(x)) == project(x) across body types.
SuiteResult suite_projection_idempotence(int count, std::uint64_t seed);

/// ||P(x) - P(y)|| <= ||x - y|| on random pairs.
SuiteResult suite_projection_nonexpansive(int count, std::uint64_t seed);

/// For triangles with the query point in their plane, the recursive
/// projection equals the explicit minimum over the three edge projections.
SuiteResult suite_triangle_edge_consistency(int count, std::uint64_t seed);

/// nnls_hull residual ~ 0 exactly when the membership test accepts.
SuiteResult suite_hull_residual_membership(int pairs, std::uint64_t seed);

/// Points constructed inside a body by convex combination are members.
SuiteResult suite_constructed_point_membership(int count, std::uint64_t seed);

/// Barycentric coordinates recombine to the query point and sum to one.
SuiteResult suite_barycentric_roundtrip(int count, std::uint64_t seed);

/// Ray casts always land on a member that is visible and sits on the
/// boundary: membership flips within 1e-6 along the ray.
SuiteResult suite_ray_boundary_witness(int count, std::uint64_t seed);

/// Splitting a visible point into a proper convex combination inside its
/// carrying face keeps every part visible.
SuiteResult suite_proper_combination_visibility(int count, std::uint64_t seed);

/// The dense lambda scan matches the bisection within grid resolution.
SuiteResult suite_scan_matches_bisection(std::size_t steps);

/// Lattice projection never beats the exact one and is within
/// diameter/resolution of it.
SuiteResult suite_grid_oracle_bounds(int count, std::uint64_t seed);

/// sample_visible is reproducible for a fixed seed.
SuiteResult suite_sample_determinism(std::uint64_t seed);

/// Sampled visible points are never closer than the projection, which
/// attains the distance.
SuiteResult suite_visible_distance_bound(int count, std::uint64_t seed);

struct SuiteOptions {
  int instances = 100;
  std::uint64_t seed = 0;
};

/// Every property suite at counts scaled for the verify subcommand.
std::vector<SuiteResult> run_property_suites(const SuiteOptions& options);

}  // namespace visicone
