#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "visicone/bodies.hpp"

namespace visicone {

/// Tolerances shared by the visibility queries.
///
/// `pre_tol` admits a candidate as a body member; `member_tol` is the much
/// tighter tolerance used for the membership probes inside the bisection
/// (loose probes inflate the blocked fraction on rays that graze the
/// boundary); `vis_tol` is the threshold on the blocked fraction lambda*
/// below which a candidate counts as visible.
struct VisibilityParams {
  double pre_tol = 1e-8;
  double member_tol = 1e-12;
  double vis_tol = 1e-7;
};

/// Tolerance actually used for a membership probe of this body inside the
/// scans. Polytope residuals come out of the active-set solve with a noise
/// floor near 4e-12, so probes against them are held at 1e-10 or the
/// scan predicate would flip on solver noise instead of geometry; bodies
/// with closed-form or direct-solve membership keep params.member_tol.
double membership_probe_tol(const Body& body, const VisibilityParams& params);

enum class VisibilityMethod { kLambdaScan, kConeTest };

/// Witness for a visibility verdict. lambda_star is the largest fraction of
/// the way from the candidate toward the query point that stays inside the
/// body; the candidate is visible exactly when it is ~0. When blocked,
/// `blocker` is the body point at that fraction.
struct VisibilityCertificate {
  bool visible = false;
  double lambda_star = 0.0;
  std::optional<Vector> blocker;
  VisibilityMethod method = VisibilityMethod::kLambdaScan;
};

/// Largest lambda in [0, 1] with lambda*x + (1-lambda)*v inside the body,
/// found by 60 bisection steps on the membership predicate (the feasible
/// set is an interval containing 0 because v is a member). Returns 1 when
/// x itself is a member. Throws NotInBody when v fails the membership
/// precondition at pre_tol.
double lambda_max(const Body& body, const Vector& x, const Vector& v,
                  const VisibilityParams& params = {});

/// Visibility certificate for candidate v seen from x. For polytopes the
/// lambda verdict is cross-checked against the translated-cone test
/// whenever x is outside the body; a disagreement throws
/// CertificateMismatch.
VisibilityCertificate is_visible(const Body& body, const Vector& x,
                                 const Vector& v,
                                 const VisibilityParams& params = {});

struct RaycastResult {
  Vector point;
  double lambda0 = 0.0;
};

/// First body point seen from x along the ray toward body member y; returns
/// x itself when x is inside the body.
RaycastResult raycast_hit(const Body& body, const Vector& x, const Vector& y,
                          const VisibilityParams& params = {});
Vector raycast_visible(const Body& body, const Vector& x, const Vector& y,
                       const VisibilityParams& params = {});

/// True when x - v lies in the conic hull of {vertex - v}, decided by a
/// nonnegative least-squares fit with residual threshold
/// 1e-8 * (1 + ||x - v||). By the translated-cone characterization this is
/// "v is blocked from x". Throws NotInBody when v is not in the polytope.
bool in_translated_cone(const Polytope& p, const Vector& v, const Vector& x);

/// Membership test by intersecting the translated cones at every vertex:
/// x is in the polytope iff no vertex cone excludes it.
bool member_by_cone_intersection(const Polytope& p, const Vector& x);

/// `count` visible points produced by ray casts from x toward seeded random
/// interior targets. Supported bodies: simplex, polytope, flat, disk cone.
/// Deterministic for a fixed seed.
std::vector<Vector> sample_visible(const Body& body, const Vector& x,
                                   std::size_t count, std::uint64_t seed,
                                   const VisibilityParams& params = {});

/// Strong-separation witness: a linear functional with
///   <normal, s> <= offset - gap/2 for s on the segment,
///   <normal, c> >= offset + gap/2 for c in the polytope,
/// where gap = squared distance of the closest pair and offset is midway.
struct SeparationCertificate {
  Vector normal;
  double offset = 0.0;
  double gap = 0.0;
};

/// Certificate separating segment [x, y] from the polytope, built from the
/// closest pair found by alternating projections. Throws NotDisjoint when
/// the squared gap is <= 1e-9.
SeparationCertificate separate_segment(const Polytope& p, const Vector& x,
                                       const Vector& y);

enum class SegmentEnd { kX, kY, kBoth };

/// Which endpoint of [x, y] maximizes the certificate functional
/// (kBoth when the functional is constant on the segment).
SegmentEnd argmax_on_segment(const SeparationCertificate& cert,
                             const Vector& x, const Vector& y);

}  // namespace visicone
