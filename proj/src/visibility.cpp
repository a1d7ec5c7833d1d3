#include "visicone/visibility.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "visicone/errors.hpp"
#include "visicone/projection.hpp"

namespace visicone {

namespace {

constexpr int kBisectionSteps = 60;

bool degenerate_pair(const Vector& x, const Vector& v) {
  return distance(x, v) <= 1e-12 * (1.0 + norm(x));
}

void require_member(const Body& body, const Vector& v, double pre_tol,
                    const char* what) {
  if (!contains(body, v, pre_tol)) {
    throw NotInBody(std::string(what) + " is not a member of the body");
  }
}

}  // namespace

double membership_probe_tol(const Body& body, const VisibilityParams& params) {
  if (std::holds_alternative<Polytope>(body)) {
    return std::max(params.member_tol, 1e-10);
  }
  return params.member_tol;
}

double lambda_max(const Body& body, const Vector& x, const Vector& v,
                  const VisibilityParams& params) {
  require_same_dim(x, v);
  require_member(body, v, params.pre_tol, "candidate");

  const double probe = membership_probe_tol(body, params);
  if (contains(body, x, probe)) return 1.0;

  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < kBisectionSteps; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (contains(body, mix(x, v, mid), probe)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

VisibilityCertificate is_visible(const Body& body, const Vector& x,
                                 const Vector& v,
                                 const VisibilityParams& params) {
  require_same_dim(x, v);
  require_member(body, v, params.pre_tol, "candidate");

  VisibilityCertificate cert;
  if (degenerate_pair(x, v)) {
    // The segment collapses to the candidate itself, which is a member.
    cert.visible = true;
    cert.lambda_star = 0.0;
    return cert;
  }

  cert.lambda_star = lambda_max(body, x, v, params);
  cert.visible = cert.lambda_star <= params.vis_tol;
  if (!cert.visible) cert.blocker = mix(x, v, cert.lambda_star);

  // The cone characterization only applies when x is outside the body;
  // there it must deliver the same verdict.
  if (const Polytope* p = std::get_if<Polytope>(&body)) {
    if (!contains(*p, x, params.pre_tol)) {
      const bool blocked_by_cone = in_translated_cone(*p, v, x);
      if (blocked_by_cone == cert.visible) {
        throw CertificateMismatch(
            "lambda scan and translated-cone test disagree (lambda* = " +
            std::to_string(cert.lambda_star) + ")");
      }
      cert.method = VisibilityMethod::kConeTest;
    }
  }
  return cert;
}

RaycastResult raycast_hit(const Body& body, const Vector& x, const Vector& y,
                          const VisibilityParams& params) {
  require_same_dim(x, y);
  if (contains(body, x, params.pre_tol)) return {x, 1.0};
  const double lambda0 = lambda_max(body, x, y, params);
  return {mix(x, y, lambda0), lambda0};
}

Vector raycast_visible(const Body& body, const Vector& x, const Vector& y,
                       const VisibilityParams& params) {
  return raycast_hit(body, x, y, params).point;
}

bool in_translated_cone(const Polytope& p, const Vector& v, const Vector& x) {
  require_same_dim(v, x);
  if (!contains(p, v, 1e-8)) {
    throw NotInBody("cone apex is not a member of the polytope");
  }
  std::vector<Vector> generators;
  generators.reserve(p.vertices.size());
  for (const Vector& vert : p.vertices) generators.push_back(vert - v);
  NnlsResult fit = nnls(generators, x - v, 50 * p.vertices.size());
  return fit.residual <= 1e-8 * (1.0 + distance(x, v));
}

bool member_by_cone_intersection(const Polytope& p, const Vector& x) {
  for (const Vector& vertex : p.vertices) {
    if (!in_translated_cone(p, vertex, x)) return false;
  }
  return true;
}

namespace {

// Seeded interior target for each supported body type.
struct InteriorSampler {
  std::mt19937_64& rng;

  Vector operator()(const Simplex& s) { return hull_target(s.vertices); }
  Vector operator()(const Polytope& p) { return hull_target(p.vertices); }

  Vector operator()(const AffineFlat& f) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector y = f.base;
    for (const Vector& d : f.directions) y = y + gauss(rng) * d;
    return y;
  }

  Vector operator()(const DiskCone&) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::uniform_real_distribution<double> radial(0.0, 4.0);
    double a = 0.0;
    double c = 0.0;
    do {
      a = unif(rng);
      c = unif(rng);
    } while (a * a + c * c > 1.0);
    const double rho = radial(rng);
    return Vector{1.0 + rho, rho * a, rho * (1.0 + c)};
  }

  Vector operator()(const Segment&) {
    throw UnsupportedBody("sample_visible does not support segments");
  }

  Vector hull_target(const std::vector<Vector>& vertices) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(vertices.size());
    double sum = 0.0;
    for (double& wi : w) {
      wi = expo(rng);
      sum += wi;
    }
    Vector y = Vector::zero(vertices.front().dim());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t c = 0; c < y.dim(); ++c) {
        y[c] += (w[i] / sum) * vertices[i][c];
      }
    }
    return y;
  }
};

}  // namespace

std::vector<Vector> sample_visible(const Body& body, const Vector& x,
                                   std::size_t count, std::uint64_t seed,
                                   const VisibilityParams& params) {
  std::mt19937_64 rng(seed);
  InteriorSampler sampler{rng};
  std::vector<Vector> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const Vector target = std::visit(sampler, body);
    out.push_back(raycast_visible(body, x, target, params));
  }
  return out;
}

SeparationCertificate separate_segment(const Polytope& p, const Vector& x,
                                       const Vector& y) {
  require_same_dim(x, y);
  require_same_dim(p.vertices.front(), x);

  const bool point_segment = distance(x, y) <= 1e-12 * (1.0 + norm(x));
  Vector s = x;
  Vector q = min_norm_oracle(p, s).point;
  if (!point_segment) {
    const Segment seg(x, y);
    double prev_gap = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int round = 0; round < 10000; ++round) {
      s = project_segment(seg, q).point;
      q = min_norm_oracle(p, s).point;
      const double gap = distance(s, q);
      if (prev_gap - gap < 1e-12) {
        converged = true;
        break;
      }
      prev_gap = gap;
    }
    if (!converged) {
      throw MaxIterationsExceeded("closest-pair alternation did not settle");
    }
  }

  const Vector normal = q - s;
  const double gap = norm_sq(normal);
  if (gap <= 1e-9) {
    throw NotDisjoint("segment and polytope are not strongly separated");
  }

  SeparationCertificate cert;
  cert.normal = normal;
  cert.gap = gap;
  cert.offset = dot(normal, s) + 0.5 * gap;

  // The closest pair's variational inequalities make these margins exact up
  // to rounding; a violation means the alternation returned a bogus pair.
  const double slack = 1e-9 * (1.0 + std::abs(cert.offset) + gap);
  const double seg_max = std::max(dot(normal, x), dot(normal, y));
  if (seg_max > cert.offset - 0.5 * gap + slack) {
    throw CertificateMismatch("separation certificate fails on the segment");
  }
  for (const Vector& vertex : p.vertices) {
    if (dot(normal, vertex) < cert.offset + 0.5 * gap - slack) {
      throw CertificateMismatch("separation certificate fails on a vertex");
    }
  }
  return cert;
}

SegmentEnd argmax_on_segment(const SeparationCertificate& cert, const Vector& x,
                             const Vector& y) {
  const double at_x = dot(cert.normal, x);
  const double at_y = dot(cert.normal, y);
  const double tie = 1e-10 * (1.0 + std::abs(at_x) + std::abs(at_y));
  if (std::abs(at_x - at_y) <= tie) return SegmentEnd::kBoth;
  return at_x > at_y ? SegmentEnd::kX : SegmentEnd::kY;
}

}  // namespace visicone
