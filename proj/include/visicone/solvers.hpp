#pragma once

#include <cstddef>
#include <vector>

#include "visicone/vectorspace.hpp"

namespace visicone {

struct NnlsResult {
  std::vector<double> coeffs;  // one per column, all >= 0
  double residual = 0.0;       // Euclidean norm of b - sum coeffs[i] * a_i
};

/// Nonnegative least squares min ||sum mu_i a_i - b||, mu >= 0, by the
/// classic active-set iteration (normal equations on the passive set,
/// feasibility line search on the inner loop).
NnlsResult nnls(const std::vector<Vector>& columns, const Vector& b,
                std::size_t max_iter);

struct HullPointResult {
  std::vector<double> weights;  // one per point, >= 0, summing to 1
  Vector point;                 // sum weights[i] * points[i]
  double distance = 0.0;        // ||point - target||
};

/// Nearest point of conv(points) to target, solved exactly by the min-norm
/// point active-set method: grow a corral of points, take the minimum-norm
/// point of its affine hull, and line-search back to feasibility whenever an
/// affine weight leaves the simplex. Terminates with the unique nearest
/// point; the equality constraint sum w = 1 holds to rounding because the
/// affine subproblems eliminate it exactly.
HullPointResult nearest_hull_point(const std::vector<Vector>& points,
                                   const Vector& target,
                                   std::size_t max_iter);

}  // namespace visicone
