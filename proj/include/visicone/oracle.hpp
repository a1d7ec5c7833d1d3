#pragma once

#include <cstddef>

#include "visicone/projection.hpp"
#include "visicone/visibility.hpp"

namespace visicone {

/// Brute-force nearest point over the barycentric lattice with weights
/// k_i / resolution, sum k_i = resolution. The returned distance is never
/// below the exact one (every lattice point is feasible) and exceeds it by
/// at most diameter / resolution. Throws BudgetExceeded when the lattice
/// has more than 10^7 nodes; intentionally slow, exists to validate the
/// projection routines.
ProjectionResult grid_project(const Simplex& s, const Vector& x,
                              std::size_t resolution);
ProjectionResult grid_project(const Polytope& p, const Vector& x,
                              std::size_t resolution);

/// Largest lambda on the uniform grid {k / steps} whose segment point is a
/// body member; within 1/steps of lambda_max. The dense-scan counterpart to
/// the bisection.
double scan_lambda(const Body& body, const Vector& x, const Vector& v,
                   std::size_t steps, const VisibilityParams& params = {});

/// Largest lattice resolution whose barycentric grid over n+1 vertices
/// stays within `node_budget` nodes (at least 2).
std::size_t lattice_resolution_for_budget(std::size_t vertex_count,
                                          std::size_t node_budget);

}  // namespace visicone
