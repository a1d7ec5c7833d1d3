#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "visicone/solvers.hpp"
#include "visicone/vectorspace.hpp"

namespace visicone {

/// Closed line segment [a, b] with distinct endpoints.
struct Segment {
  Vector a;
  Vector b;
  Segment(Vector a_, Vector b_);
};

/// Convex hull of n+1 affinely independent vertices (n >= 1, n <= d).
struct Simplex {
  std::vector<Vector> vertices;
  explicit Simplex(std::vector<Vector> vertices_);

  std::size_t order() const { return vertices.size() - 1; }
  /// Vertex list with entry `drop` removed (the facet opposite that vertex).
  std::vector<Vector> vertices_without(std::size_t drop) const;
};

/// Convex hull of a finite point set. Vertices may be affinely dependent;
/// exact duplicates are removed at construction.
struct Polytope {
  std::vector<Vector> vertices;
  explicit Polytope(std::vector<Vector> vertices_);
};

/// base + span(directions); an empty direction list is a single point.
struct AffineFlat {
  Vector base;
  std::vector<Vector> directions;
  AffineFlat(Vector base_, std::vector<Vector> directions_);
};

/// The fixed 3-d body (1,0,0) + cone{(1, s, t) : s^2 + (t-1)^2 <= 1}.
/// Its membership has a closed form and it witnesses a visible set that is
/// not closed; it is deliberately not configurable or translatable.
struct DiskCone {};

using Body = std::variant<Segment, Simplex, Polytope, AffineFlat, DiskCone>;

std::size_t dimension(const Segment& s);
std::size_t dimension(const Simplex& s);
std::size_t dimension(const Polytope& p);
std::size_t dimension(const AffineFlat& f);
std::size_t dimension(const DiskCone&);
std::size_t dimension(const Body& body);

/// Barycentric weights over a simplex's vertices, summing to 1.
struct BarycentricCoords {
  std::vector<double> weights;
};

/// Least-squares fit of x against base + span(points[i] - points[0]):
/// coefficients over the difference vectors, the fitted point, and the
/// orthogonal residual norm. Shared by barycentric coordinates, membership
/// and the flat projection.
struct AffineFit {
  std::vector<double> coeffs;  // one per points[i], i >= 1
  Vector point;
  double residual = 0.0;
};
AffineFit fit_affine_span(const std::vector<Vector>& points, const Vector& x);

/// Unique barycentric coordinates of x in the simplex's affine hull.
/// Throws NotInAffineHull when the orthogonal residual exceeds
/// 1e-8 * (1 + ||x||).
BarycentricCoords barycentric_coords(const Simplex& s, const Vector& x);

bool contains(const Segment& s, const Vector& x, double tol);
bool contains(const Simplex& s, const Vector& x, double tol);
bool contains(const Polytope& p, const Vector& x, double tol);
bool contains(const AffineFlat& f, const Vector& x, double tol);
bool contains(const DiskCone&, const Vector& x, double tol);
bool contains(const Body& body, const Vector& x, double tol);

struct HullFit {
  std::vector<double> weights;  // over the deduplicated vertex list
  double residual = 0.0;        // Euclidean distance from x to the hull
};

/// Nearest-hull-point solve for the polytope: optimal weights (>= 0,
/// summing to 1 to rounding) and the Euclidean residual. Residual ~ 0
/// exactly when x is a hull member, so this doubles as the membership and
/// minimum-norm oracle. Iteration cap is 50 * vertex count.
HullFit nnls_hull(const Polytope& p, const Vector& x);

Segment translate(const Segment& s, const Vector& t);
Simplex translate(const Simplex& s, const Vector& t);
Polytope translate(const Polytope& p, const Vector& t);
AffineFlat translate(const AffineFlat& f, const Vector& t);
Body translate(const Body& body, const Vector& t);

}  // namespace visicone
