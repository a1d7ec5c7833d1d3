#include "visicone/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "visicone/errors.hpp"

namespace visicone {

namespace {

Vector combine(const std::vector<Vector>& columns,
               const std::vector<double>& coeffs, std::size_t dim) {
  Vector out = Vector::zero(dim);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (coeffs[j] == 0.0) continue;
    for (std::size_t i = 0; i < dim; ++i) out[i] += coeffs[j] * columns[j][i];
  }
  return out;
}

// Least-squares coefficients for the selected columns via normal equations.
std::vector<double> passive_ls(const std::vector<Vector>& columns,
                               const Vector& b,
                               const std::vector<std::size_t>& passive) {
  std::vector<Vector> sel;
  sel.reserve(passive.size());
  for (std::size_t j : passive) sel.push_back(columns[j]);
  SymMatrix g = gram_matrix(sel);
  Vector rhs = Vector::zero(passive.size());
  for (std::size_t i = 0; i < passive.size(); ++i) rhs[i] = dot(sel[i], b);
  Vector z = solve_spd(g, rhs);
  return z.coords();
}

}  // namespace

NnlsResult nnls(const std::vector<Vector>& columns, const Vector& b,
                std::size_t max_iter) {
  const std::size_t k = columns.size();
  const std::size_t dim = b.dim();
  for (const Vector& c : columns) require_same_dim(c, b);

  std::vector<double> mu(k, 0.0);
  std::vector<bool> passive(k, false);
  std::vector<bool> banned(k, false);  // columns whose subproblem went singular
  std::vector<std::size_t> pset;

  double max_col = 0.0;
  for (const Vector& c : columns) max_col = std::max(max_col, norm(c));
  const double dual_tol = 1e-12 * (1.0 + max_col) * (1.0 + norm(b));

  Vector r = b;
  std::size_t iter = 0;
  while (true) {
    if (++iter > max_iter) {
      throw MaxIterationsExceeded("nnls hit its iteration cap");
    }
    // Price the inactive columns and pick the most positive dual.
    double best_w = dual_tol;
    std::size_t best_j = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (passive[j] || banned[j]) continue;
      const double w = dot(columns[j], r);
      if (w > best_w) {
        best_w = w;
        best_j = j;
      }
    }
    if (best_j == k) break;  // KKT satisfied

    passive[best_j] = true;
    pset.push_back(best_j);

    // Inner feasibility loop.
    while (true) {
      std::vector<double> z;
      try {
        z = passive_ls(columns, b, pset);
      } catch (const NotPositiveDefinite&) {
        // Dependent column slipped in on a near-zero dual; retire it.
        passive[best_j] = false;
        banned[best_j] = true;
        pset.erase(std::find(pset.begin(), pset.end(), best_j));
        z.clear();
      }
      if (z.empty()) break;

      bool all_positive = true;
      for (double zi : z) {
        if (zi <= 0.0) {
          all_positive = false;
          break;
        }
      }
      if (all_positive) {
        for (std::size_t i = 0; i < pset.size(); ++i) mu[pset[i]] = z[i];
        break;
      }
      // Step as far toward z as feasibility allows; the blocking index
      // lands exactly on zero and leaves the passive set.
      double alpha = std::numeric_limits<double>::infinity();
      std::size_t blocker = pset.size();
      for (std::size_t i = 0; i < pset.size(); ++i) {
        if (z[i] > 0.0) continue;
        const double m = mu[pset[i]];
        const double step = m / (m - z[i]);
        if (step < alpha) {
          alpha = step;
          blocker = i;
        }
      }
      for (std::size_t i = 0; i < pset.size(); ++i) {
        mu[pset[i]] = std::max(0.0, mu[pset[i]] + alpha * (z[i] - mu[pset[i]]));
      }
      mu[pset[blocker]] = 0.0;
      passive[pset[blocker]] = false;
      pset.erase(pset.begin() + static_cast<std::ptrdiff_t>(blocker));
      if (pset.empty()) break;
      if (++iter > max_iter) {
        throw MaxIterationsExceeded("nnls hit its iteration cap");
      }
    }
    r = b - combine(columns, mu, dim);
  }

  NnlsResult out;
  out.coeffs = std::move(mu);
  out.residual = norm(r);
  return out;
}

namespace {

// Minimum-norm point of the affine hull of the selected shifted points:
// weights alpha with sum alpha = 1, free sign, minimizing ||sum alpha u||.
std::vector<double> affine_minimizer(const std::vector<Vector>& u,
                                     const std::vector<std::size_t>& corral) {
  const std::size_t m = corral.size();
  if (m == 1) return {1.0};
  const Vector& u0 = u[corral[0]];
  std::vector<Vector> diffs;
  diffs.reserve(m - 1);
  for (std::size_t i = 1; i < m; ++i) diffs.push_back(u[corral[i]] - u0);
  SymMatrix g = gram_matrix(diffs);
  Vector rhs = Vector::zero(m - 1);
  for (std::size_t i = 0; i + 1 < m; ++i) rhs[i] = -dot(u0, diffs[i]);
  Vector beta = solve_spd(g, rhs);
  std::vector<double> alpha(m);
  double sum = 0.0;
  for (std::size_t i = 1; i < m; ++i) {
    alpha[i] = beta[i - 1];
    sum += beta[i - 1];
  }
  alpha[0] = 1.0 - sum;
  return alpha;
}

}  // namespace

HullPointResult nearest_hull_point(const std::vector<Vector>& points,
                                   const Vector& target,
                                   std::size_t max_iter) {
  if (points.empty()) {
    throw InvalidArgument("nearest_hull_point needs at least one point");
  }
  const std::size_t k = points.size();
  const std::size_t dim = target.dim();
  for (const Vector& p : points) require_same_dim(p, target);

  std::vector<Vector> u;
  u.reserve(k);
  for (const Vector& p : points) u.push_back(p - target);

  double max_norm = 0.0;
  for (const Vector& ui : u) max_norm = std::max(max_norm, norm(ui));

  std::size_t start = 0;
  for (std::size_t j = 1; j < k; ++j) {
    if (norm_sq(u[j]) < norm_sq(u[start])) start = j;
  }
  std::vector<std::size_t> corral{start};
  std::vector<double> lam{1.0};
  Vector y = u[start];
  double prev_norm_sq = norm_sq(y);

  std::size_t iter = 0;
  while (true) {
    if (++iter > max_iter) {
      throw MaxIterationsExceeded("nearest_hull_point hit its iteration cap");
    }
    // Optimality: no point improves on the supporting value of y. The
    // tolerance scales with ||y|| so small residuals are certified at a
    // proportionally small duality gap (an absolute gap of g only bounds
    // the distance error by g / ||y||).
    std::size_t jmin = 0;
    double dmin = dot(y, u[0]);
    for (std::size_t j = 1; j < k; ++j) {
      const double d = dot(y, u[j]);
      if (d < dmin) {
        dmin = d;
        jmin = j;
      }
    }
    const double stop_tol = 1e-13 * (1.0 + max_norm) * norm(y) +
                            1e-15 * (1.0 + max_norm * max_norm);
    if (dmin >= norm_sq(y) - stop_tol) break;
    if (std::find(corral.begin(), corral.end(), jmin) != corral.end()) {
      break;  // rounding stall; current iterate is optimal to tolerance
    }
    corral.push_back(jmin);
    lam.push_back(0.0);

    // Pull the affine minimizer back into the simplex, shedding points
    // whose weight hits zero.
    while (true) {
      std::vector<double> alpha;
      try {
        alpha = affine_minimizer(u, corral);
      } catch (const NotPositiveDefinite&) {
        corral.pop_back();
        lam.pop_back();
        break;
      }
      double amin = alpha[0];
      for (double a : alpha) amin = std::min(amin, a);
      if (amin > -1e-12) {
        for (double& a : alpha) a = std::max(a, 0.0);
        lam = alpha;
        break;
      }
      double theta = 1.0;
      std::size_t drop = corral.size();
      for (std::size_t i = 0; i < corral.size(); ++i) {
        if (alpha[i] > 0.0) continue;
        const double t = lam[i] / (lam[i] - alpha[i]);
        if (t < theta) {
          theta = t;
          drop = i;
        }
      }
      for (std::size_t i = 0; i < corral.size(); ++i) {
        lam[i] = std::max(0.0, (1.0 - theta) * lam[i] + theta * alpha[i]);
      }
      if (drop < corral.size()) {
        lam.erase(lam.begin() + static_cast<std::ptrdiff_t>(drop));
        corral.erase(corral.begin() + static_cast<std::ptrdiff_t>(drop));
      }
      if (corral.size() <= 1) break;
      if (++iter > max_iter) {
        throw MaxIterationsExceeded(
            "nearest_hull_point hit its iteration cap");
      }
    }

    // Renormalize and rebuild the iterate from scratch each major cycle.
    double s = 0.0;
    for (double l : lam) s += l;
    for (double& l : lam) l /= s;
    y = Vector::zero(dim);
    for (std::size_t i = 0; i < corral.size(); ++i) {
      for (std::size_t c = 0; c < dim; ++c) y[c] += lam[i] * u[corral[i]][c];
    }

    // Every exact major cycle strictly shrinks ||y||; once rounding stops
    // delivering that, the iterate cannot be improved in this precision.
    const double cur_norm_sq = norm_sq(y);
    if (cur_norm_sq >= prev_norm_sq * (1.0 - 1e-12)) break;
    prev_norm_sq = cur_norm_sq;
  }

  HullPointResult out;
  out.weights.assign(k, 0.0);
  for (std::size_t i = 0; i < corral.size(); ++i) out.weights[corral[i]] = lam[i];
  out.point = y + target;
  out.distance = norm(y);
  return out;
}

}  // namespace visicone
