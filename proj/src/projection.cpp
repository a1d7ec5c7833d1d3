#include "visicone/projection.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>

#include "visicone/errors.hpp"

namespace visicone {

namespace {

constexpr double kBaryTol = 1e-10;

std::vector<double> clamp_and_renormalize(std::vector<double> w) {
  double sum = 0.0;
  for (double& wi : w) {
    wi = std::max(wi, 0.0);
    sum += wi;
  }
  for (double& wi : w) wi /= sum;
  return w;
}

}  // namespace

AffineFlat affine_hull(const Simplex& s) {
  std::vector<Vector> dirs;
  dirs.reserve(s.order());
  for (std::size_t i = 1; i < s.vertices.size(); ++i) {
    dirs.push_back(s.vertices[i] - s.vertices[0]);
  }
  return AffineFlat(s.vertices[0], std::move(dirs));
}

ProjectionResult project_segment(const Segment& s, const Vector& x) {
  require_same_dim(s.a, x);
  const Vector dir = s.b - s.a;
  const double alpha = dot(x - s.a, dir) / norm_sq(dir);
  const double t = std::clamp(alpha, 0.0, 1.0);
  ProjectionResult r;
  r.point = s.a + t * dir;
  r.distance = distance(x, r.point);
  r.weights = {1.0 - t, t};
  return r;
}

ProjectionResult project_affine(const AffineFlat& f, const Vector& x) {
  require_same_dim(f.base, x);
  ProjectionResult r;
  if (f.directions.empty()) {
    r.point = f.base;
    r.distance = distance(x, f.base);
    return r;
  }
  try {
    SymMatrix g = gram_matrix(f.directions);
    Vector rhs = Vector::zero(f.directions.size());
    const Vector shifted = x - f.base;
    for (std::size_t i = 0; i < f.directions.size(); ++i) {
      rhs[i] = dot(shifted, f.directions[i]);
    }
    Vector alpha = solve_spd(g, rhs);
    r.point = f.base;
    for (std::size_t i = 0; i < f.directions.size(); ++i) {
      r.point = r.point + alpha[i] * f.directions[i];
    }
    r.weights = alpha.coords();
  } catch (const NotPositiveDefinite& e) {
    throw DegenerateFlat(e.what());
  }
  r.distance = distance(x, r.point);
  return r;
}

namespace {

// Nearest point of conv(vertices) to x for an affinely independent vertex
// list, handling the 0- and 1-dimensional bases of the facet recursion.
ProjectionResult project_vertex_list(const std::vector<Vector>& vertices,
                                     const Vector& x) {
  if (vertices.size() == 1) {
    ProjectionResult r;
    r.point = vertices.front();
    r.distance = distance(x, r.point);
    r.weights = {1.0};
    return r;
  }
  if (vertices.size() == 2) {
    return project_segment(Segment(vertices[0], vertices[1]), x);
  }
  return project_simplex(Simplex(vertices), x);
}

}  // namespace

ProjectionResult project_simplex(const Simplex& s, const Vector& x) {
  require_same_dim(s.vertices.front(), x);

  // Base case of the descent: a 1-simplex is a segment with a closed form.
  if (s.order() == 1) {
    return project_segment(Segment(s.vertices[0], s.vertices[1]), x);
  }

  // Reduce to the affine hull; everything below happens inside it.
  ProjectionResult reduced = project_affine(affine_hull(s), x);
  const Vector& xr = reduced.point;
  const double dist_to_hull = reduced.distance;

  AffineFit fit = fit_affine_span(s.vertices, xr);
  std::vector<double> bary(s.vertices.size());
  double coeff_sum = 0.0;
  for (std::size_t i = 0; i < fit.coeffs.size(); ++i) {
    bary[i + 1] = fit.coeffs[i];
    coeff_sum += fit.coeffs[i];
  }
  bary[0] = 1.0 - coeff_sum;

  ProjectionResult r;
  const double min_w = *std::min_element(bary.begin(), bary.end());
  if (min_w >= -kBaryTol) {
    r.point = xr;
    r.distance = dist_to_hull;
    r.weights = clamp_and_renormalize(std::move(bary));
    return r;
  }

  // The reduced point is outside: the nearest point lies on a facet.
  std::optional<ProjectionResult> best;
  std::size_t best_drop = 0;
  for (std::size_t j = 0; j < s.vertices.size(); ++j) {
    ProjectionResult cand = project_vertex_list(s.vertices_without(j), xr);
    if (!best || cand.distance < best->distance) {
      best = std::move(cand);
      best_drop = j;
    }
  }

  r.point = best->point;
  r.distance = std::sqrt(dist_to_hull * dist_to_hull +
                         best->distance * best->distance);
  r.weights.assign(s.vertices.size(), 0.0);
  for (std::size_t i = 0, k = 0; i < s.vertices.size(); ++i) {
    if (i == best_drop) continue;
    r.weights[i] = best->weights[k++];
  }
  r.facet_chain.push_back(best_drop);
  r.facet_chain.insert(r.facet_chain.end(), best->facet_chain.begin(),
                       best->facet_chain.end());
  return r;
}

std::size_t default_subset_budget() {
  if (const char* env = std::getenv("VISICONE_MAX_SUBSETS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw InvalidArgument("VISICONE_MAX_SUBSETS is not a positive integer");
  }
  return std::size_t{1} << 20;
}

namespace {

// Count of nonempty subsets of size <= kmax, saturating at `cap`+1.
std::size_t count_subsets(std::size_t m, std::size_t kmax, std::size_t cap) {
  std::size_t total = 0;
  double binom = 1.0;
  for (std::size_t k = 1; k <= kmax; ++k) {
    binom = binom * static_cast<double>(m - k + 1) / static_cast<double>(k);
    if (binom > static_cast<double>(cap) || total > cap) return cap + 1;
    total += static_cast<std::size_t>(binom);
  }
  return total;
}

}  // namespace

ProjectionResult project_polytope(const Polytope& p, const Vector& x,
                                  std::size_t subset_budget) {
  require_same_dim(p.vertices.front(), x);
  const std::size_t m = p.vertices.size();
  const std::size_t d = dimension(p);
  const std::size_t kmax = std::min(m, d + 1);

  if (count_subsets(m, kmax, subset_budget) > subset_budget) {
    throw SubsetBudgetExceeded("polytope subset enumeration over budget (" +
                               std::to_string(m) + " vertices)");
  }

  std::optional<ProjectionResult> best;
  std::vector<std::size_t> best_subset;
  std::vector<std::size_t> subset;
  std::vector<Vector> pts;

  auto consider = [&]() {
    pts.clear();
    for (std::size_t i : subset) pts.push_back(p.vertices[i]);
    if (pts.size() >= 2 && !is_affinely_independent(pts)) return;
    ProjectionResult cand = project_vertex_list(pts, x);
    if (!best || cand.distance < best->distance) {
      best = std::move(cand);
      best_subset = subset;
    }
  };

  // Enumerate subsets in ascending size, lexicographic within a size, so
  // ties resolve deterministically to the first minimum found.
  auto recurse = [&](auto&& self, std::size_t next, std::size_t remaining) -> void {
    if (remaining == 0) {
      consider();
      return;
    }
    for (std::size_t i = next; i + remaining <= m; ++i) {
      subset.push_back(i);
      self(self, i + 1, remaining - 1);
      subset.pop_back();
    }
  };
  for (std::size_t k = 1; k <= kmax; ++k) recurse(recurse, 0, k);

  ProjectionResult r;
  r.point = best->point;
  r.distance = best->distance;
  r.weights.assign(m, 0.0);
  for (std::size_t i = 0; i < best_subset.size(); ++i) {
    r.weights[best_subset[i]] = best->weights[i];
  }
  return r;
}

ProjectionResult min_norm_oracle(const Polytope& p, const Vector& x) {
  HullFit fit = nnls_hull(p, x);
  ProjectionResult r;
  r.point = Vector::zero(dimension(p));
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (fit.weights[i] == 0.0) continue;
    for (std::size_t c = 0; c < r.point.dim(); ++c) {
      r.point[c] += fit.weights[i] * p.vertices[i][c];
    }
  }
  r.distance = fit.residual;
  r.weights = std::move(fit.weights);
  return r;
}

}  // namespace visicone
