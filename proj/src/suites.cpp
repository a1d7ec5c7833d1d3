#include "visicone/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "visicone/errors.hpp"
#include "visicone/oracle.hpp"
#include "visicone/projection.hpp"
#include "visicone/visibility.hpp"

namespace visicone {

namespace {

using Rng = std::mt19937_64;

// Collects pass/fail bookkeeping for one suite.
struct Checker {
  SuiteResult result;

  explicit Checker(std::string name) { result.name = std::move(name); }

  void check(bool ok, const std::string& note) {
    ++result.checked;
    if (!ok) {
      ++result.failed;
      if (result.detail.empty()) result.detail = note;
    }
  }

  SuiteResult finish() {
    result.pass = result.failed == 0;
    return result;
  }
};

double unif(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t unif_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Vector random_point(Rng& rng, std::size_t d, double half_width) {
  std::vector<double> c(d);
  for (double& ci : c) ci = unif(rng, -half_width, half_width);
  return Vector(std::move(c));
}

// Smallest altitude: distance from a vertex to the affine hull of the
// others. Near-flat draws (altitude below 1e-3) are redrawn; on them the
// floating-point answer is dominated by conditioning rather than geometry,
// so suite tolerances would measure the wrong thing.
double min_altitude(const std::vector<Vector>& vs) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < vs.size(); ++k) {
    std::vector<Vector> others;
    others.reserve(vs.size() - 1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i != k) others.push_back(vs[i]);
    }
    best = std::min(best, fit_affine_span(others, vs[k]).residual);
  }
  return best;
}

Simplex random_simplex(Rng& rng, std::size_t n, std::size_t d) {
  while (true) {
    std::vector<Vector> vs;
    vs.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) vs.push_back(random_point(rng, d, 1.0));
    if (!is_affinely_independent(vs)) continue;
    if (min_altitude(vs) < 1e-3) continue;
    return Simplex(std::move(vs));
  }
}

Polytope random_polytope(Rng& rng, std::size_t m, std::size_t d) {
  std::vector<Vector> vs;
  vs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) vs.push_back(random_point(rng, d, 1.0));
  return Polytope(std::move(vs));
}

std::vector<double> dirichlet_weights(Rng& rng, std::size_t m) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(m);
  double sum = 0.0;
  for (double& wi : w) {
    wi = expo(rng);
    sum += wi;
  }
  for (double& wi : w) wi /= sum;
  return w;
}

Vector hull_combination(const std::vector<Vector>& vs,
                        const std::vector<double>& w) {
  Vector p = Vector::zero(vs.front().dim());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t c = 0; c < p.dim(); ++c) p[c] += w[i] * vs[i][c];
  }
  return p;
}

Vector hull_sample(Rng& rng, const std::vector<Vector>& vs) {
  return hull_combination(vs, dirichlet_weights(rng, vs.size()));
}

Vector centroid(const std::vector<Vector>& vs) {
  std::vector<double> w(vs.size(), 1.0 / static_cast<double>(vs.size()));
  return hull_combination(vs, w);
}

// Interior sample pulled toward the centroid so it stays a macroscopic
// distance from the boundary (grazing samples make verdicts ill-posed).
Vector deep_hull_sample(Rng& rng, const std::vector<Vector>& vs) {
  return mix(centroid(vs), hull_sample(rng, vs), 0.4);
}

// Query point outside the polytope, at least min_dist away; regenerates
// boundary-band draws the same way the membership comparisons do.
Vector outside_point(Rng& rng, const Polytope& p, double min_dist,
                     double half_width) {
  while (true) {
    Vector x = random_point(rng, dimension(p), half_width);
    if (nnls_hull(p, x).residual >= min_dist) return x;
  }
}

Vector outside_point(Rng& rng, const Simplex& s, double min_dist,
                     double half_width) {
  while (true) {
    Vector x = random_point(rng, dimension(s), half_width);
    if (project_simplex(s, x).distance >= min_dist) return x;
  }
}

double diameter(const std::vector<Vector>& vs) {
  double best = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      best = std::max(best, distance(vs[i], vs[j]));
    }
  }
  return best;
}

// Rays that graze the boundary make lambda* ill-conditioned (the membership
// margin is nearly flat along the segment), so verdict comparisons on such
// rays measure rounding, not geometry. The generators below redraw targets
// until the crossing is transversal: the hit certifies cleanly visible and
// membership decays sharply past it. Same policy as excluding
// boundary-band points from the membership comparisons.

struct CleanHit {
  Vector point;
  double lambda0 = 0.0;
  Vector target;
};

template <class DrawFn>
CleanHit transversal_raycast(const Body& body, const Vector& x, DrawFn draw) {
  CleanHit out{x, 0.0, x};
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Vector y = draw();
    const RaycastResult hit = raycast_hit(body, x, y);
    out = {hit.point, hit.lambda0, y};
    if (hit.lambda0 + 1e-6 > 1.0) continue;
    if (contains(body, mix(x, y, hit.lambda0 + 1e-6), 1e-9)) continue;
    if (lambda_max(body, x, hit.point) > 1e-9) continue;
    return out;
  }
  return out;
}

// Interior point, clearly blocked from x, whose exit crossing toward x is
// sharp enough for lambda* to be well conditioned.
Vector sharp_blocked_sample(Rng& rng, const Polytope& p, const Vector& x) {
  Vector v = deep_hull_sample(rng, p.vertices);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const double lam = lambda_max(Body(p), x, v);
    if (lam > 1e-5 && lam + 1e-6 <= 1.0 &&
        !contains(Body(p), mix(x, v, lam + 1e-6), 1e-9)) {
      return v;
    }
    v = deep_hull_sample(rng, p.vertices);
  }
  return v;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

SuiteResult suite_disk_cone_witness(int grid_points) {
  Checker ck("disk-cone-witness");
  const Body cone = DiskCone{};
  const Vector origin = Vector::zero(3);

  for (int k = 1; k <= grid_points; ++k) {
    const double t = static_cast<double>(k) * std::numbers::pi /
                     static_cast<double>(grid_points + 1);
    const Vector v{2.0, std::sin(t), 1.0 + std::cos(t)};
    VisibilityCertificate cert = is_visible(cone, origin, v);
    ck.check(cert.visible, "arc point t=" + fmt(t) + " flagged blocked, lambda*=" +
                               fmt(cert.lambda_star));
  }

  const Vector limit{2.0, 0.0, 0.0};
  VisibilityCertificate cert = is_visible(cone, origin, limit);
  ck.check(!cert.visible, "limit direction reported visible");
  ck.check(std::abs(cert.lambda_star - 0.5) <= 1e-6,
           "limit lambda* = " + fmt(cert.lambda_star));
  ck.check(contains(cone, Vector{1.5, 0.0, 0.0}, 1e-9),
           "(1.5, 0, 0) not accepted as member");
  return ck.finish();
}

std::vector<SuiteResult> suite_projection_battery(int instances,
                                                  std::uint64_t seed) {
  Checker oracle_ck("projection-oracle-agreement");
  Checker vi_ck("projection-variational-inequality");
  Checker red_ck("projection-reduction-identity");
  Checker vis_ck("projection-point-visible");
  Rng rng(seed);

  constexpr std::size_t kLatticeNodeBudget = 200'000;

  for (int inst = 0; inst < instances; ++inst) {
    const std::size_t n = unif_index(rng, 1, 6);
    const std::size_t d = unif_index(rng, n, 8);
    const Simplex s = random_simplex(rng, n, d);

    // Points in the blocked band (0, 1e-4) from the body make the visible
    // verdict ill-posed at bisection resolution; redraw them.
    Vector x = random_point(rng, d, 2.0);
    ProjectionResult proj = project_simplex(s, x);
    while (proj.distance > 1e-12 && proj.distance < 1e-4) {
      x = random_point(rng, d, 2.0);
      proj = project_simplex(s, x);
    }

    const std::string tag = " (instance " + std::to_string(inst) + ")";

    ProjectionResult qp = min_norm_oracle(Polytope(s.vertices), x);
    oracle_ck.check(distance(proj.point, qp.point) <= 1e-6,
                    "min-norm route differs by " +
                        fmt(distance(proj.point, qp.point)) + tag);

    const std::size_t res = std::min<std::size_t>(
        300, lattice_resolution_for_budget(n + 1, kLatticeNodeBudget));
    ProjectionResult grid = grid_project(s, x, res);
    const double diam = diameter(s.vertices);
    oracle_ck.check(grid.distance >= proj.distance - 1e-9,
                    "lattice beat the exact projection" + tag);
    oracle_ck.check(
        grid.distance <= proj.distance + diam / static_cast<double>(res) + 1e-6,
        "lattice distance " + fmt(grid.distance) + " too far above " +
            fmt(proj.distance) + tag);

    const double vi_tol = 1e-8 * (1.0 + norm_sq(x));
    for (const Vector& vertex : s.vertices) {
      vi_ck.check(dot(x - proj.point, vertex - proj.point) <= vi_tol,
                  "variational inequality violated" + tag);
    }

    ProjectionResult red = project_affine(affine_hull(s), x);
    ProjectionResult sub = project_simplex(s, red.point);
    const double lhs = proj.distance * proj.distance;
    const double rhs = red.distance * red.distance + sub.distance * sub.distance;
    red_ck.check(std::abs(lhs - rhs) <= 1e-8 * (1.0 + lhs),
                 "reduction identity off by " + fmt(lhs - rhs) + tag);

    VisibilityCertificate cert = is_visible(Body(s), x, proj.point);
    vis_ck.check(cert.visible, "projected point blocked, lambda*=" +
                                   fmt(cert.lambda_star) + tag);
  }
  return {oracle_ck.finish(), vi_ck.finish(), red_ck.finish(),
          vis_ck.finish()};
}

SuiteResult suite_cone_scan_agreement(int triples, std::uint64_t seed) {
  Checker ck("cone-vs-scan-agreement");
  Rng rng(seed);
  for (int i = 0; i < triples; ++i) {
    const std::size_t d = unif_index(rng, 2, 5);
    const std::size_t m = unif_index(rng, d + 2, d + 6);
    const Polytope p = random_polytope(rng, m, d);
    const Vector x = outside_point(rng, p, 1e-3, 3.0);
    const Body body(p);
    const Vector v =
        (i % 2 == 0)
            ? deep_hull_sample(rng, p.vertices)
            : transversal_raycast(body, x, [&] {
                return deep_hull_sample(rng, p.vertices);
              }).point;
    const double lambda = lambda_max(body, x, v);
    const bool scan_visible = lambda <= 1e-7;
    const bool cone_blocked = in_translated_cone(p, v, x);
    ck.check(scan_visible != cone_blocked,
             "routes disagree at triple " + std::to_string(i) +
                 " (lambda*=" + fmt(lambda) + ")");
  }
  return ck.finish();
}

SuiteResult suite_cone_intersection_membership(int polytopes, int points_per,
                                               std::uint64_t seed) {
  Checker ck("cone-intersection-membership");
  Rng rng(seed);
  for (int i = 0; i < polytopes; ++i) {
    const std::size_t d = unif_index(rng, 2, 5);
    const std::size_t m = unif_index(rng, d + 2, d + 7);
    const Polytope p = random_polytope(rng, m, d);
    for (int j = 0; j < points_per; ++j) {
      Vector z = Vector::zero(d);
      while (true) {
        z = (j % 2 == 0) ? hull_sample(rng, p.vertices)
                         : random_point(rng, d, 1.5);
        const double r = nnls_hull(p, z).residual;
        if (r <= 1e-12 || r >= 1e-6) break;  // boundary band: redraw
      }
      const bool direct = contains(p, z, 1e-8);
      const bool by_cones = member_by_cone_intersection(p, z);
      ck.check(direct == by_cones,
               "membership routes disagree (polytope " + std::to_string(i) +
                   ", point " + std::to_string(j) + ")");
    }
  }
  return ck.finish();
}

SuiteResult suite_translation_invariance(int count, std::uint64_t seed) {
  Checker ck("translation-invariance");
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const std::size_t d = unif_index(rng, 2, 4);
    const std::size_t m = unif_index(rng, d + 1, d + 5);
    const Polytope p = random_polytope(rng, m, d);
    const Vector x = outside_point(rng, p, 1e-3, 3.0);
    const Vector v =
        (i % 2 == 0)
            ? sharp_blocked_sample(rng, p, x)
            : transversal_raycast(Body(p), x, [&] {
                return deep_hull_sample(rng, p.vertices);
              }).point;
    const Vector t = random_point(rng, d, 5.0);

    VisibilityCertificate base = is_visible(Body(p), x, v);
    VisibilityCertificate moved =
        is_visible(translate(Body(p), t), x + t, v + t);
    ck.check(base.visible == moved.visible,
             "verdict changed under translation (instance " +
                 std::to_string(i) + ")");
    ck.check(std::abs(base.lambda_star - moved.lambda_star) <= 1e-9,
             "lambda* moved by " +
                 fmt(base.lambda_star - moved.lambda_star) + " (instance " +
                 std::to_string(i) + ")");
  }
  return ck.finish();
}

SuiteResult suite_segment_separation(int count, std::uint64_t seed) {
  Checker ck("segment-separation");
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const std::size_t d = unif_index(rng, 2, 4);
    const std::size_t m = unif_index(rng, d + 1, d + 5);
    const Polytope p = random_polytope(rng, m, d);
    const Vector x = outside_point(rng, p, 0.3, 3.0);
    const Vector v =
        raycast_visible(Body(p), x, deep_hull_sample(rng, p.vertices));
    const Vector y = mix(x, v, unif(rng, 0.2, 0.9));

    const std::string tag = " (instance " + std::to_string(i) + ")";
    try {
      SeparationCertificate cert = separate_segment(p, x, y);
      ck.check(cert.gap > 0.0, "nonpositive gap" + tag);
      ck.check(argmax_on_segment(cert, x, y) != SegmentEnd::kX,
               "functional peaked strictly at the far end" + tag);
    } catch (const Error& e) {
      ck.check(false, std::string("separation failed: ") + e.what() + tag);
    }
  }
  return ck.finish();
}

SuiteResult suite_projected_support_visibility(int count, std::uint64_t seed) {
  Checker ck("projected-support-visibility");
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const std::size_t n = unif_index(rng, 1, 6);
    const std::size_t d = unif_index(rng, n, 8);
    const Simplex s = random_simplex(rng, n, d);
    const Vector x = outside_point(rng, s, 1e-3, 2.0);
    const ProjectionResult proj = project_simplex(s, x);
    for (std::size_t k = 0; k < s.vertices.size(); ++k) {
      if (proj.weights[k] <= 1e-7) continue;
      VisibilityCertificate cert = is_visible(Body(s), x, s.vertices[k]);
      ck.check(cert.visible, "supporting vertex " + std::to_string(k) +
                                 " blocked (instance " + std::to_string(i) +
                                 ", lambda*=" + fmt(cert.lambda_star) + ")");
    }
  }
  return ck.finish();
}

SuiteResult suite_flat_full_visibility(int flats, int samples_per,
                                       std::uint64_t seed) {
  Checker ck("flat-full-visibility");
  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < flats; ++i) {
    const std::size_t d = unif_index(rng, 2, 5);
    const std::size_t f = unif_index(rng, 1, std::min<std::size_t>(3, d - 1));
    std::vector<Vector> dirs;
    while (dirs.size() < f) {
      dirs.push_back(random_point(rng, d, 1.0));
      if (!is_linearly_independent(dirs)) dirs.pop_back();
    }
    const AffineFlat flat(random_point(rng, d, 1.0), dirs);

    Vector x = random_point(rng, d, 2.0);
    while (project_affine(flat, x).distance < 0.1) {
      x = random_point(rng, d, 2.0);
    }

    for (int j = 0; j < samples_per; ++j) {
      Vector y = flat.base;
      for (const Vector& dir : dirs) y = y + gauss(rng) * dir;
      RaycastResult hit = raycast_hit(Body(flat), x, y);
      ck.check(hit.lambda0 <= 1e-7,
               "flat point blocked at lambda0=" + fmt(hit.lambda0) +
                   " (flat " + std::to_string(i) + ")");
      ck.check(distance(hit.point, y) <= 1e-9,
               "ray did not land on its target (flat " + std::to_string(i) +
                   ")");
    }
  }
  return ck.finish();
}

SuiteResult suite_projection_idempotence(int count, std::uint64_t seed) {
  Checker ck("projection-idempotence");
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const std::size_t d = unif_index(rng, 2, 6);
    const Vector x = random_point(rng, d, 3.0);
    const std::string tag = " (instance " + std::to_string(i) + ")";
    switch (i % 4) {
      case 0: {
        const Segment s(random_point(rng, d, 1.0), random_point(rng, d, 1.0));
        const Vector p = project_segment(s, x).point;
        ck.check(distance(project_segment(s, p).point, p) <= 1e-9,
                 "segment projection not idempotent" + tag);
        break;
      }
      case 1: {
        const std::size_t n = unif_index(rng, 1, std::min<std::size_t>(4, d));
        const Simplex s = random_simplex(rng, n, d);
        const Vector p = project_simplex(s, x).point;
        ck.check(distance(project_simplex(s, p).point, p) <= 1e-9,
                 "simplex projection not idempotent" + tag);
        break;
      }
      case 2: {
        const Polytope p = random_polytope(rng, d + 3, d);
        const Vector q = project_polytope(p, x).point;
        ck.check(distance(project_polytope(p, q).point, q) <= 1e-9,
                 "polytope projection not idempotent" + tag);
        break;
      }
      default: {
        std::vector<Vector> dirs{random_point(rng, d, 1.0)};
        const AffineFlat f(random_point(rng, d, 1.0), dirs);
        const Vector p = project_affine(f, x).point;
        ck.check(distance(project_affine(f, p).point, p) <= 1e-9,
                 "flat projection not idempotent" + tag);
        break;
      }
    }
  }
  return ck.finish();
}

SuiteResult suite_projection_nonexpansive(int count, std::uint64_t seed) {
  Checker ck("projection-nonexpansive");
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const std::size_t n = unif_index(rng, 1, 4);
    const std::size_t d = unif_index(rng, n, 6);
    const Simplex s = random_simplex(rng, n, d);
    const Vector x = random_point(rng, d, 3.0);
    const Vector y = random_point(rng, d, 3.0);
    const double moved =
        distance(project_simplex(s, x).point, project_simplex(s, y).point);
    ck.check(moved <= distance(x, y) + 1e-9,
             "projection expanded a pair (instance " + std::to_string(i) +
                 ")");
  }
  return ck.finish();
}

SuiteResult suite_triangle_edge_consistency(int count, std::uint64_t seed) {
  Checker ck("triangle-edge-consistency");
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const std::size_t d = (i % 2 == 0) ? 2 : 3;
    const Simplex tri = random_simplex(rng, 2, d);

    // Query point inside the triangle's plane but outside the triangle.
    Vector x = Vector::zero(d);
    while (true) {
      const double a = unif(rng, -2.0, 2.0);
      const double b = unif(rng, -2.0, 2.0);
      x = tri.vertices[0] + a * (tri.vertices[1] - tri.vertices[0]) +
          b * (tri.vertices[2] - tri.vertices[0]);
      if (!contains(tri, x, 1e-9)) break;
    }

    double best = std::numeric_limits<double>::infinity();
    Vector best_point = tri.vertices[0];
    for (std::size_t e = 0; e < 3; ++e) {
      const ProjectionResult r = project_segment(
          Segment(tri.vertices[e], tri.vertices[(e + 1) % 3]), x);
      if (r.distance < best) {
        best = r.distance;
        best_point = r.point;
      }
    }
    const ProjectionResult r = project_simplex(tri, x);
    ck.check(distance(r.point, best_point) <= 1e-9,
             "recursive projection differs from explicit edge minimum "
             "(instance " +
                 std::to_string(i) + ")");
  }
  return ck.finish();
}

SuiteResult suite_hull_residual_membership(int pairs, std::uint64_t seed) {
  Checker ck("hull-residual-membership");
  Rng rng(seed);
  for (int i = 0; i < pairs; ++i) {
    const std::size_t d = unif_index(rng, 2, 6);
    const std::size_t m = unif_index(rng, d + 1, d + 6);
    const Polytope p = random_polytope(rng, m, d);
    Vector z = Vector::zero(d);
    while (true) {
      z = (i % 2 == 0) ? hull_sample(rng, p.vertices)
                       : random_point(rng, d, 1.5);
      const double r = nnls_hull(p, z).residual;
      if (r <= 1e-11 || r >= 1e-8) break;
    }
    const bool tiny_residual = nnls_hull(p, z).residual <= 1e-10;
    ck.check(tiny_residual == contains(p, z, 1e-9),
             "residual and membership disagree (pair " + std::to_string(i) +
                 ")");
  }
  return ck.finish();
}

SuiteResult suite_constructed_point_membership(int count, std::uint64_t seed) {
  Checker ck("constructed-point-membership");
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const std::size_t d = unif_index(rng, 2, 6);
    const std::string tag = " (instance " + std::to_string(i) + ")";
    switch (i % 5) {
      case 0: {
        const Segment s(random_point(rng, d, 1.0), random_point(rng, d, 1.0));
        const Vector p = mix(s.a, s.b, unif(rng, 0.0, 1.0));
        ck.check(contains(s, p, 1e-9), "segment point rejected" + tag);
        break;
      }
      case 1: {
        const std::size_t n = unif_index(rng, 1, std::min<std::size_t>(4, d));
        const Simplex s = random_simplex(rng, n, d);
        ck.check(contains(s, hull_sample(rng, s.vertices), 1e-9),
                 "simplex point rejected" + tag);
        break;
      }
      case 2: {
        const Polytope p = random_polytope(rng, d + 3, d);
        ck.check(contains(p, hull_sample(rng, p.vertices), 1e-9),
                 "polytope point rejected" + tag);
        break;
      }
      case 3: {
        std::vector<Vector> dirs{random_point(rng, d, 1.0)};
        const AffineFlat f(random_point(rng, d, 1.0), dirs);
        const Vector p = f.base + unif(rng, -3.0, 3.0) * dirs[0];
        ck.check(contains(f, p, 1e-9), "flat point rejected" + tag);
        break;
      }
      default: {
        double a = 0.0;
        double c = 0.0;
        do {
          a = unif(rng, -1.0, 1.0);
          c = unif(rng, -1.0, 1.0);
        } while (a * a + c * c > 1.0);
        const double rho = unif(rng, 0.0, 3.0);
        const Vector p{1.0 + rho, rho * a, rho * (1.0 + c)};
        ck.check(contains(DiskCone{}, p, 1e-9), "cone point rejected" + tag);
        break;
      }
    }
  }
  return ck.finish();
}

SuiteResult suite_barycentric_roundtrip(int count, std::uint64_t seed) {
  Checker ck("barycentric-roundtrip");
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const std::size_t n = unif_index(rng, 1, 5);
    const std::size_t d = unif_index(rng, n, 7);
    const Simplex s = random_simplex(rng, n, d);

    // Affine-hull point with signed weights: barycentric coordinates must
    // recombine regardless of membership.
    std::vector<double> w(n + 1);
    double sum = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      w[k] = unif(rng, -1.0, 2.0);
      sum += w[k];
    }
    w[0] = 1.0 - sum;
    const Vector x = hull_combination(s.vertices, w);

    const BarycentricCoords bc = barycentric_coords(s, x);
    double bc_sum = 0.0;
    for (double wi : bc.weights) bc_sum += wi;
    ck.check(std::abs(bc_sum - 1.0) <= 1e-10,
             "weights sum to " + fmt(bc_sum));
    const Vector back = hull_combination(s.vertices, bc.weights);
    double err = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
      err = std::max(err, std::abs(back[c] - x[c]));
    }
    ck.check(err <= 1e-9, "recombination off by " + fmt(err));
  }
  return ck.finish();
}

SuiteResult suite_ray_boundary_witness(int count, std::uint64_t seed) {
  Checker ck("ray-boundary-witness");
  Rng rng(seed);
  const VisibilityParams params;
  for (int i = 0; i < count; ++i) {
    const std::size_t d = unif_index(rng, 2, 5);
    Body body = DiskCone{};
    Vector x = Vector::zero(3);
    if (i % 3 == 0) {
      x = Vector{unif(rng, -1.0, 0.5), unif(rng, -1.0, 1.0),
                 unif(rng, -1.0, 1.0)};
    } else if (i % 3 == 1) {
      const std::size_t n = unif_index(rng, 1, std::min<std::size_t>(4, d));
      const Simplex s = random_simplex(rng, n, d);
      body = s;
      x = outside_point(rng, s, 1e-3, 2.0);
    } else {
      const Polytope p = random_polytope(rng, d + 3, d);
      body = p;
      x = outside_point(rng, p, 1e-3, 2.0);
    }

    const CleanHit hit = transversal_raycast(body, x, [&] {
      if (std::holds_alternative<DiskCone>(body)) {
        const double rho = unif(rng, 0.1, 2.0);
        double a = 0.0;
        double c = 0.0;
        do {
          a = unif(rng, -1.0, 1.0);
          c = unif(rng, -1.0, 1.0);
        } while (a * a + c * c > 1.0);
        return Vector{1.0 + rho, rho * a, rho * (1.0 + c)};
      }
      if (const Simplex* s = std::get_if<Simplex>(&body)) {
        return hull_sample(rng, s->vertices);
      }
      return deep_hull_sample(rng, std::get<Polytope>(body).vertices);
    });

    const std::string tag = " (instance " + std::to_string(i) + ")";
    ck.check(contains(body, hit.point, 1e-8), "hit point not a member" + tag);
    ck.check(is_visible(body, x, hit.point, params).visible,
             "hit point not visible" + tag);
    if (hit.lambda0 + 1e-6 <= 1.0) {
      ck.check(!contains(body, mix(x, hit.target, hit.lambda0 + 1e-6),
                         membership_probe_tol(body, params)),
               "membership did not flip past the hit" + tag);
    }
  }
  return ck.finish();
}

SuiteResult suite_proper_combination_visibility(int count,
                                                std::uint64_t seed) {
  Checker ck("proper-combination-visibility");
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const std::size_t d = unif_index(rng, 2, 4);
    const std::size_t m = unif_index(rng, d + 1, d + 5);
    const Polytope p = random_polytope(rng, m, d);
    const Vector x = outside_point(rng, p, 0.1, 3.0);
    const Vector x0 = transversal_raycast(Body(p), x, [&] {
                        return deep_hull_sample(rng, p.vertices);
                      }).point;

    // Carrying face of x0: vertices with meaningful hull weight.
    const HullFit fit = nnls_hull(p, x0);
    std::vector<std::size_t> face;
    double min_w = 1.0;
    for (std::size_t k = 0; k < fit.weights.size(); ++k) {
      if (fit.weights[k] > 1e-7) {
        face.push_back(k);
        min_w = std::min(min_w, fit.weights[k]);
      }
    }
    if (face.size() < 2) continue;  // x0 landed on a vertex; nothing to split

    // Split the representation in weight space: x0 = (c1 + c2) / 2 with
    // both parts proper combinations of the face vertices.
    std::vector<double> delta(face.size());
    double mean = 0.0;
    for (double& dk : delta) {
      dk = unif(rng, 0.0, 1.0);
      mean += dk;
    }
    mean /= static_cast<double>(face.size());
    double max_abs = 0.0;
    for (double& dk : delta) {
      dk -= mean;
      max_abs = std::max(max_abs, std::abs(dk));
    }
    if (max_abs == 0.0) continue;
    const double scale = 0.4 * min_w / max_abs;

    Vector c1 = Vector::zero(d);
    Vector c2 = Vector::zero(d);
    for (std::size_t k = 0; k < face.size(); ++k) {
      const double w = fit.weights[face[k]];
      const double w1 = w + scale * delta[k];
      const double w2 = w - scale * delta[k];
      for (std::size_t c = 0; c < d; ++c) {
        c1[c] += w1 * p.vertices[face[k]][c];
        c2[c] += w2 * p.vertices[face[k]][c];
      }
    }

    const std::string tag = " (instance " + std::to_string(i) + ")";
    ck.check(is_visible(Body(p), x, x0).visible,
             "combined point not visible" + tag);
    ck.check(is_visible(Body(p), x, c1).visible, "first part blocked" + tag);
    ck.check(is_visible(Body(p), x, c2).visible, "second part blocked" + tag);
  }
  return ck.finish();
}

SuiteResult suite_scan_matches_bisection(std::size_t steps) {
  Checker ck("scan-matches-bisection");
  const double bound = 1e-6 + 1.0 / static_cast<double>(steps);

  const auto compare = [&](const Body& body, const Vector& x, const Vector& v,
                           const std::string& what) {
    const double scanned = scan_lambda(body, x, v, steps);
    const double bisected = lambda_max(body, x, v);
    ck.check(std::abs(scanned - bisected) <= bound,
             what + ": scan " + fmt(scanned) + " vs bisection " +
                 fmt(bisected));
  };

  const Body cone = DiskCone{};
  const Vector origin = Vector::zero(3);
  compare(cone, origin, Vector{2.0, 0.0, 0.0}, "cone limit direction");
  compare(cone, origin, Vector{2.0, 1.0, 1.0}, "cone arc midpoint");
  compare(cone, origin, Vector{2.0, std::sin(3.0), 1.0 + std::cos(3.0)},
          "cone near-limit arc point");

  const Polytope square(
      {Vector{0.0, 0.0}, Vector{1.0, 0.0}, Vector{1.0, 1.0}, Vector{0.0, 1.0}});
  compare(Body(square), Vector{2.0, 0.5}, Vector{0.0, 0.5}, "square blocked");
  compare(Body(square), Vector{2.0, 0.5}, Vector{1.0, 0.5}, "square visible");

  const Simplex tri({Vector{0.0, 0.0}, Vector{1.0, 0.0}, Vector{0.0, 1.0}});
  compare(Body(tri), Vector{2.0, 2.0}, Vector{0.1, 0.1}, "triangle blocked");

  const AffineFlat axis(Vector{0.0, 0.0}, {Vector{1.0, 0.0}});
  compare(Body(axis), Vector{1.0, 2.0}, Vector{-3.0, 0.0}, "flat point");

  return ck.finish();
}

SuiteResult suite_grid_oracle_bounds(int count, std::uint64_t seed) {
  Checker ck("grid-oracle-bounds");
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const std::size_t n = unif_index(rng, 1, 3);
    const std::size_t d = unif_index(rng, n, 5);
    const Simplex s = random_simplex(rng, n, d);
    const Vector x = random_point(rng, d, 2.0);
    const std::size_t res = unif_index(rng, 2, 60);
    const ProjectionResult exact = project_simplex(s, x);
    const ProjectionResult grid = grid_project(s, x, res);
    const std::string tag = " (instance " + std::to_string(i) + ")";
    ck.check(grid.distance >= exact.distance - 1e-9,
             "lattice beat the exact distance" + tag);
    ck.check(grid.distance <= exact.distance +
                                  diameter(s.vertices) /
                                      static_cast<double>(res) +
                                  1e-9,
             "lattice bound violated" + tag);
  }
  return ck.finish();
}

SuiteResult suite_sample_determinism(std::uint64_t seed) {
  Checker ck("sample-determinism");
  const Body cone = DiskCone{};
  const Vector origin = Vector::zero(3);
  const auto first = sample_visible(cone, origin, 32, seed + 7);
  const auto second = sample_visible(cone, origin, 32, seed + 7);
  ck.check(first == second, "identical seeds produced different samples");
  const auto other = sample_visible(cone, origin, 32, seed + 8);
  ck.check(first != other, "distinct seeds produced identical samples");

  const Polytope square(
      {Vector{0.0, 0.0}, Vector{1.0, 0.0}, Vector{1.0, 1.0}, Vector{0.0, 1.0}});
  const Vector x{2.0, 0.5};
  ck.check(sample_visible(Body(square), x, 16, seed) ==
               sample_visible(Body(square), x, 16, seed),
           "polytope sampling not reproducible");
  return ck.finish();
}

SuiteResult suite_visible_distance_bound(int count, std::uint64_t seed) {
  Checker ck("visible-distance-bound");
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const std::size_t d = unif_index(rng, 2, 4);
    const Polytope p = random_polytope(rng, d + 3, d);
    const Vector x = outside_point(rng, p, 1e-3, 3.0);
    const double exact = min_norm_oracle(p, x).distance;
    const auto samples =
        sample_visible(Body(p), x, 20, seed + static_cast<std::uint64_t>(i));
    for (const Vector& v : samples) {
      ck.check(distance(x, v) >= exact - 1e-9,
               "sampled visible point beat the projection (instance " +
                   std::to_string(i) + ")");
    }
  }
  return ck.finish();
}

std::vector<SuiteResult> run_property_suites(const SuiteOptions& options) {
  const int n = std::max(1, options.instances);
  const std::uint64_t seed = options.seed;
  std::vector<SuiteResult> results;

  // A suite that throws is a failed suite, not a dead run.
  const auto guarded = [&results](const char* name, auto&& fn) {
    try {
      results.push_back(fn());
    } catch (const std::exception& e) {
      SuiteResult r;
      r.name = name;
      r.pass = false;
      r.checked = 1;
      r.failed = 1;
      r.detail = std::string("suite aborted: ") + e.what();
      results.push_back(std::move(r));
    }
  };

  guarded("disk-cone-witness", [] { return suite_disk_cone_witness(100); });
  try {
    for (SuiteResult& r : suite_projection_battery(n, seed + 1)) {
      results.push_back(std::move(r));
    }
  } catch (const std::exception& e) {
    SuiteResult r;
    r.name = "projection-battery";
    r.pass = false;
    r.checked = 1;
    r.failed = 1;
    r.detail = std::string("suite aborted: ") + e.what();
    results.push_back(std::move(r));
  }
  guarded("cone-vs-scan-agreement",
          [&] { return suite_cone_scan_agreement(2 * n, seed + 2); });
  guarded("cone-intersection-membership", [&] {
    return suite_cone_intersection_membership(std::max(2, n / 10), 20,
                                              seed + 3);
  });
  guarded("translation-invariance",
          [&] { return suite_translation_invariance(n, seed + 4); });
  guarded("segment-separation",
          [&] { return suite_segment_separation(n, seed + 5); });
  guarded("projected-support-visibility",
          [&] { return suite_projected_support_visibility(n, seed + 6); });
  guarded("flat-full-visibility", [&] {
    return suite_flat_full_visibility(std::max(2, n / 5), 20, seed + 7);
  });
  guarded("projection-idempotence",
          [&] { return suite_projection_idempotence(n, seed + 8); });
  guarded("projection-nonexpansive",
          [&] { return suite_projection_nonexpansive(n, seed + 9); });
  guarded("triangle-edge-consistency",
          [&] { return suite_triangle_edge_consistency(n, seed + 10); });
  guarded("hull-residual-membership",
          [&] { return suite_hull_residual_membership(2 * n, seed + 11); });
  guarded("constructed-point-membership",
          [&] { return suite_constructed_point_membership(2 * n, seed + 12); });
  guarded("barycentric-roundtrip",
          [&] { return suite_barycentric_roundtrip(n, seed + 13); });
  guarded("ray-boundary-witness",
          [&] { return suite_ray_boundary_witness(n, seed + 14); });
  guarded("proper-combination-visibility",
          [&] { return suite_proper_combination_visibility(n, seed + 15); });
  guarded("scan-matches-bisection", [&] {
    return suite_scan_matches_bisection(n >= 500 ? 1'000'000 : 100'000);
  });
  guarded("grid-oracle-bounds",
          [&] { return suite_grid_oracle_bounds(std::max(5, n / 5), seed + 16); });
  guarded("sample-determinism", [&] { return suite_sample_determinism(seed + 17); });
  guarded("visible-distance-bound", [&] {
    return suite_visible_distance_bound(std::max(5, n / 5), seed + 18);
  });
  return results;
}

}  // namespace visicone
