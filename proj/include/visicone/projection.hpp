#pragma once

#include <cstddef>
#include <vector>

#include "visicone/bodies.hpp"

namespace visicone {

/// Result of a best-approximation query.
///
/// `weights` are barycentric coordinates for segments/simplices, hull
/// weights for polytopes, and direction coefficients for flats.
/// `facet_chain` records, for the recursive simplex routine, which vertex
/// was dropped at each level (indices local to the simplex at that level);
/// it is empty when the reduced point already lies in the body or the body
/// has no facets to descend into.
struct ProjectionResult {
  Vector point;
  double distance = 0.0;
  std::vector<double> weights;
  std::vector<std::size_t> facet_chain;
};

/// Affine hull of the simplex: first vertex plus the difference directions.
AffineFlat affine_hull(const Simplex& s);

/// Closed-form nearest point of a segment: clamp the line coefficient
/// <x-a, b-a>/||b-a||^2 to [0, 1].
ProjectionResult project_segment(const Segment& s, const Vector& x);

/// Nearest point of the flat via the normal equations on its directions.
ProjectionResult project_affine(const AffineFlat& f, const Vector& x);

/// Nearest point of the simplex by reduction and facet descent:
/// project onto the affine hull, accept when the barycentric weights are
/// nonnegative, otherwise recurse into every facet and keep the closest
/// candidate (ties to the smallest dropped index). The distance to the
/// original query point is accumulated through
/// d^2(x, C) = d^2(x, aff C) + d^2(x', C).
ProjectionResult project_simplex(const Simplex& s, const Vector& x);

/// Default Caratheodory enumeration budget: 2^20 subsets, overridable via
/// the VISICONE_MAX_SUBSETS environment variable.
std::size_t default_subset_budget();

/// Nearest point of the polytope by exhaustive Caratheodory reduction:
/// take the best simplex projection over every affinely independent vertex
/// subset of size <= d+1 (single vertices included). Throws
/// SubsetBudgetExceeded when the subset count would exceed the budget.
ProjectionResult project_polytope(const Polytope& p, const Vector& x,
                                  std::size_t subset_budget = default_subset_budget());

/// Independent route to the same nearest point through the hull min-norm
/// solve; used to cross-validate project_simplex / project_polytope.
ProjectionResult min_norm_oracle(const Polytope& p, const Vector& x);

}  // namespace visicone
