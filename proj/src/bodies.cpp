#include "visicone/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "visicone/errors.hpp"

namespace visicone {

namespace {

constexpr double kSegmentMinLength = 1e-12;

void require_common_dim(const std::vector<Vector>& pts, const char* what) {
  if (pts.empty()) {
    throw InvalidArgument(std::string(what) + " needs at least one vertex");
  }
  for (const Vector& p : pts) require_same_dim(pts.front(), p);
}

double in_aff_tol(const Vector& x) { return 1e-8 * (1.0 + norm(x)); }

}  // namespace

Segment::Segment(Vector a_, Vector b_) : a(std::move(a_)), b(std::move(b_)) {
  require_same_dim(a, b);
  if (distance(a, b) <= kSegmentMinLength) {
    throw InvalidArgument("segment endpoints coincide");
  }
}

Simplex::Simplex(std::vector<Vector> vertices_) : vertices(std::move(vertices_)) {
  require_common_dim(vertices, "simplex");
  if (vertices.size() < 2) {
    throw InvalidArgument("simplex needs at least two vertices");
  }
  if (vertices.size() > vertices.front().dim() + 1) {
    throw InvalidArgument("simplex has more vertices than dimension + 1");
  }
  if (!is_affinely_independent(vertices)) {
    throw InvalidArgument("simplex vertices are affinely dependent");
  }
}

std::vector<Vector> Simplex::vertices_without(std::size_t drop) const {
  std::vector<Vector> out;
  out.reserve(vertices.size() - 1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i != drop) out.push_back(vertices[i]);
  }
  return out;
}

Polytope::Polytope(std::vector<Vector> vertices_) : vertices(std::move(vertices_)) {
  require_common_dim(vertices, "polytope");
  std::vector<Vector> dedup;
  dedup.reserve(vertices.size());
  for (const Vector& v : vertices) {
    if (std::find(dedup.begin(), dedup.end(), v) == dedup.end()) {
      dedup.push_back(v);
    }
  }
  vertices = std::move(dedup);
}

AffineFlat::AffineFlat(Vector base_, std::vector<Vector> directions_)
    : base(std::move(base_)), directions(std::move(directions_)) {
  for (const Vector& d : directions) require_same_dim(base, d);
  if (!is_linearly_independent(directions)) {
    throw InvalidArgument("flat directions are linearly dependent");
  }
}

std::size_t dimension(const Segment& s) { return s.a.dim(); }
std::size_t dimension(const Simplex& s) { return s.vertices.front().dim(); }
std::size_t dimension(const Polytope& p) { return p.vertices.front().dim(); }
std::size_t dimension(const AffineFlat& f) { return f.base.dim(); }
std::size_t dimension(const DiskCone&) { return 3; }

std::size_t dimension(const Body& body) {
  return std::visit([](const auto& b) { return dimension(b); }, body);
}

AffineFit fit_affine_span(const std::vector<Vector>& points, const Vector& x) {
  require_common_dim(points, "affine fit");
  require_same_dim(points.front(), x);
  AffineFit fit;
  if (points.size() == 1) {
    fit.point = points.front();
    fit.residual = distance(x, points.front());
    return fit;
  }
  std::vector<Vector> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    diffs.push_back(points[i] - points[0]);
  }
  SymMatrix g = gram_matrix(diffs);
  Vector rhs = Vector::zero(diffs.size());
  const Vector shifted = x - points[0];
  for (std::size_t i = 0; i < diffs.size(); ++i) rhs[i] = dot(shifted, diffs[i]);
  Vector alpha = solve_spd(g, rhs);

  fit.coeffs = alpha.coords();
  fit.point = points[0];
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    fit.point = fit.point + alpha[i] * diffs[i];
  }
  fit.residual = distance(x, fit.point);
  return fit;
}

BarycentricCoords barycentric_coords(const Simplex& s, const Vector& x) {
  AffineFit fit = fit_affine_span(s.vertices, x);
  if (fit.residual > in_aff_tol(x)) {
    throw NotInAffineHull("point is off the simplex's affine hull (residual " +
                          std::to_string(fit.residual) + ")");
  }
  BarycentricCoords bc;
  bc.weights.resize(s.vertices.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < fit.coeffs.size(); ++i) {
    bc.weights[i + 1] = fit.coeffs[i];
    sum += fit.coeffs[i];
  }
  bc.weights[0] = 1.0 - sum;
  return bc;
}

namespace {

// Shared segment/simplex membership: within tol of the affine hull and all
// barycentric weights >= -tol.
bool hull_weights_contain(const std::vector<Vector>& vertices, const Vector& x,
                          double tol) {
  AffineFit fit = fit_affine_span(vertices, x);
  if (fit.residual > tol) return false;
  double sum = 0.0;
  for (double c : fit.coeffs) {
    if (c < -tol) return false;
    sum += c;
  }
  return 1.0 - sum >= -tol;
}

}  // namespace

bool contains(const Segment& s, const Vector& x, double tol) {
  return hull_weights_contain({s.a, s.b}, x, tol);
}

bool contains(const Simplex& s, const Vector& x, double tol) {
  return hull_weights_contain(s.vertices, x, tol);
}

bool contains(const Polytope& p, const Vector& x, double tol) {
  return nnls_hull(p, x).residual <= tol;
}

bool contains(const AffineFlat& f, const Vector& x, double tol) {
  require_same_dim(f.base, x);
  if (f.directions.empty()) return distance(x, f.base) <= tol;
  std::vector<Vector> pts;
  pts.reserve(f.directions.size() + 1);
  pts.push_back(f.base);
  for (const Vector& d : f.directions) pts.push_back(f.base + d);
  return fit_affine_span(pts, x).residual <= tol;
}

bool contains(const DiskCone&, const Vector& x, double tol) {
  if (x.dim() != 3) {
    throw DimensionMismatch("disk cone lives in dimension 3");
  }
  const double rho = x[0] - 1.0;
  if (rho < -tol) return false;
  if (std::abs(rho) <= tol) return x[1] * x[1] + x[2] * x[2] <= tol * tol;
  const double s = x[1] / rho;
  const double t = x[2] / rho;
  return s * s + (t - 1.0) * (t - 1.0) <= 1.0 + tol;
}

bool contains(const Body& body, const Vector& x, double tol) {
  return std::visit([&](const auto& b) { return contains(b, x, tol); }, body);
}

HullFit nnls_hull(const Polytope& p, const Vector& x) {
  require_same_dim(p.vertices.front(), x);
  HullPointResult r =
      nearest_hull_point(p.vertices, x, 50 * p.vertices.size());
  HullFit fit;
  fit.weights = std::move(r.weights);
  fit.residual = r.distance;
  return fit;
}

Segment translate(const Segment& s, const Vector& t) {
  return Segment(s.a + t, s.b + t);
}

Simplex translate(const Simplex& s, const Vector& t) {
  std::vector<Vector> vs;
  vs.reserve(s.vertices.size());
  for (const Vector& v : s.vertices) vs.push_back(v + t);
  return Simplex(std::move(vs));
}

Polytope translate(const Polytope& p, const Vector& t) {
  std::vector<Vector> vs;
  vs.reserve(p.vertices.size());
  for (const Vector& v : p.vertices) vs.push_back(v + t);
  return Polytope(std::move(vs));
}

AffineFlat translate(const AffineFlat& f, const Vector& t) {
  return AffineFlat(f.base + t, f.directions);
}

Body translate(const Body& body, const Vector& t) {
  return std::visit(
      [&](const auto& b) -> Body {
        if constexpr (std::is_same_v<std::decay_t<decltype(b)>, DiskCone>) {
          throw UnsupportedBody("the disk cone is a fixed body");
        } else {
          return translate(b, t);
        }
      },
      body);
}

}  // namespace visicone
