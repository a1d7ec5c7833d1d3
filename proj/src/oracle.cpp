#include "visicone/oracle.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "visicone/errors.hpp"

namespace visicone {

namespace {

constexpr std::size_t kLatticeBudget = 10'000'000;

// Lattice node count C(resolution + n, n) for n+1 vertices, saturating.
double lattice_size(std::size_t vertex_count, std::size_t resolution) {
  const std::size_t n = vertex_count - 1;
  double size = 1.0;
  for (std::size_t i = 1; i <= n; ++i) {
    size *= static_cast<double>(resolution + i) / static_cast<double>(i);
    if (size > 1e18) return 1e18;
  }
  return size;
}

ProjectionResult grid_project_vertices(const std::vector<Vector>& vertices,
                                       const Vector& x,
                                       std::size_t resolution) {
  require_same_dim(vertices.front(), x);
  if (resolution < 2) {
    throw InvalidArgument("grid oracle needs resolution >= 2");
  }
  if (lattice_size(vertices.size(), resolution) >
      static_cast<double>(kLatticeBudget)) {
    throw BudgetExceeded("barycentric lattice exceeds 1e7 nodes");
  }

  const std::size_t m = vertices.size();
  const std::size_t dim = x.dim();
  std::vector<std::size_t> counts(m, 0);
  std::vector<std::size_t> best_counts;
  double best_dist_sq = std::numeric_limits<double>::infinity();
  Vector partial = Vector::zero(dim);

  // Depth-first over weight compositions, accumulating the partial hull
  // point; enumeration order gives the deterministic tie-break.
  auto recurse = [&](auto&& self, std::size_t idx, std::size_t remaining) -> void {
    if (idx + 1 == m) {
      counts[idx] = remaining;
      double dist_sq = 0.0;
      const double w = static_cast<double>(remaining) /
                       static_cast<double>(resolution);
      for (std::size_t c = 0; c < dim; ++c) {
        const double coord = partial[c] + w * vertices[idx][c];
        const double diff = coord - x[c];
        dist_sq += diff * diff;
      }
      if (dist_sq < best_dist_sq) {
        best_dist_sq = dist_sq;
        best_counts = counts;
      }
      return;
    }
    for (std::size_t k = 0; k <= remaining; ++k) {
      counts[idx] = k;
      const double w =
          static_cast<double>(k) / static_cast<double>(resolution);
      for (std::size_t c = 0; c < dim; ++c) partial[c] += w * vertices[idx][c];
      self(self, idx + 1, remaining - k);
      for (std::size_t c = 0; c < dim; ++c) partial[c] -= w * vertices[idx][c];
    }
  };
  recurse(recurse, 0, resolution);

  ProjectionResult r;
  r.weights.resize(m);
  r.point = Vector::zero(dim);
  for (std::size_t i = 0; i < m; ++i) {
    r.weights[i] = static_cast<double>(best_counts[i]) /
                   static_cast<double>(resolution);
    for (std::size_t c = 0; c < dim; ++c) {
      r.point[c] += r.weights[i] * vertices[i][c];
    }
  }
  r.distance = distance(x, r.point);
  return r;
}

}  // namespace

ProjectionResult grid_project(const Simplex& s, const Vector& x,
                              std::size_t resolution) {
  return grid_project_vertices(s.vertices, x, resolution);
}

ProjectionResult grid_project(const Polytope& p, const Vector& x,
                              std::size_t resolution) {
  return grid_project_vertices(p.vertices, x, resolution);
}

double scan_lambda(const Body& body, const Vector& x, const Vector& v,
                   std::size_t steps, const VisibilityParams& params) {
  require_same_dim(x, v);
  if (steps < 1) throw InvalidArgument("scan needs at least one step");
  if (!contains(body, v, params.pre_tol)) {
    throw NotInBody("candidate is not a member of the body");
  }
  const double probe = membership_probe_tol(body, params);
  for (std::size_t k = steps + 1; k-- > 0;) {
    const double lambda =
        static_cast<double>(k) / static_cast<double>(steps);
    if (contains(body, mix(x, v, lambda), probe)) return lambda;
  }
  return 0.0;
}

std::size_t lattice_resolution_for_budget(std::size_t vertex_count,
                                          std::size_t node_budget) {
  std::size_t lo = 2;
  std::size_t hi = node_budget;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (lattice_size(vertex_count, mid) <=
        static_cast<double>(node_budget)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace visicone
