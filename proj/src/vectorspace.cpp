#include "visicone/vectorspace.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <utility>

namespace visicone {

namespace {

constexpr double kPivotRelTol = 1e-12;

void require_finite(const std::vector<double>& coords) {
  for (double c : coords) {
    if (!std::isfinite(c)) {
      throw InvalidArgument("vector coordinate is not finite");
    }
  }
}

}  // namespace

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) {
    throw InvalidArgument("vector must have dimension >= 1");
  }
  require_finite(coords_);
}

Vector::Vector(std::initializer_list<double> coords)
    : Vector(std::vector<double>(coords)) {}

Vector Vector::zero(std::size_t dim) {
  if (dim == 0) {
    throw InvalidArgument("vector must have dimension >= 1");
  }
  Vector v;
  v.coords_.assign(dim, 0.0);
  return v;
}

void require_same_dim(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("vector dimensions differ: " +
                            std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_dim(a, b);
  Vector out = a;
  for (std::size_t i = 0; i < b.dim(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_dim(a, b);
  Vector out = a;
  for (std::size_t i = 0; i < b.dim(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(double s, const Vector& a) {
  Vector out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] *= s;
  return out;
}

double dot(const Vector& a, const Vector& b) {
  require_same_dim(a, b);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm_sq(const Vector& a) { return dot(a, a); }

double norm(const Vector& a) { return std::sqrt(norm_sq(a)); }

double distance(const Vector& a, const Vector& b) { return norm(a - b); }

Vector mix(const Vector& x, const Vector& v, double lambda) {
  require_same_dim(x, v);
  Vector out = v;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    out[i] = lambda * x[i] + (1.0 - lambda) * v[i];
  }
  return out;
}

SymMatrix::SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

void SymMatrix::set(std::size_t i, std::size_t j, double value) {
  a_[i * n_ + j] = value;
  a_[j * n_ + i] = value;
}

SymMatrix gram_matrix(const std::vector<Vector>& vectors) {
  if (vectors.empty()) {
    throw InvalidArgument("gram_matrix needs at least one vector");
  }
  for (const Vector& v : vectors) require_same_dim(vectors.front(), v);
  SymMatrix g(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i; j < vectors.size(); ++j) {
      g.set(i, j, dot(vectors[i], vectors[j]));
    }
  }
  return g;
}

namespace {

// Diagonally pivoted LDL^T of a symmetric matrix. Returns nullopt when a
// selected pivot falls below kPivotRelTol times the largest original
// diagonal entry (or the diagonal is not positive to begin with).
struct Ldlt {
  std::size_t n = 0;
  std::vector<double> lower;      // unit lower factor, row-major
  std::vector<double> diag;       // pivots
  std::vector<std::size_t> perm;  // row/col permutation applied first
};

std::optional<Ldlt> factorize(const SymMatrix& m) {
  const std::size_t n = m.size();
  Ldlt f;
  f.n = n;
  f.lower.assign(n * n, 0.0);
  f.diag.assign(n, 0.0);
  f.perm.resize(n);
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  if (n == 0) return f;

  // Working copy of the permuted matrix.
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);
  }

  double max_diag = a[0];
  for (std::size_t i = 1; i < n; ++i) max_diag = std::max(max_diag, a[i * n + i]);
  if (!(max_diag > 0.0)) return std::nullopt;
  const double pivot_tol = kPivotRelTol * max_diag;

  auto swap_rc = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[q * n + j]);
    for (std::size_t i = 0; i < n; ++i) std::swap(a[i * n + p], a[i * n + q]);
    for (std::size_t j = 0; j < n; ++j)
      std::swap(f.lower[p * n + j], f.lower[q * n + j]);
    std::swap(f.perm[p], f.perm[q]);
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i * n + i] > a[best * n + best]) best = i;
    }
    swap_rc(k, best);

    const double pivot = a[k * n + k];
    if (!(pivot >= pivot_tol)) return std::nullopt;
    f.diag[k] = pivot;
    f.lower[k * n + k] = 1.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double l = a[i * n + k] / pivot;
      f.lower[i * n + k] = l;
      for (std::size_t j = k + 1; j <= i; ++j) {
        a[i * n + j] -= l * a[k * n + j];
        a[j * n + i] = a[i * n + j];
      }
    }
  }
  return f;
}

Vector ldlt_solve(const Ldlt& f, const Vector& rhs) {
  const std::size_t n = f.n;
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = rhs[f.perm[i]];
  // L y' = P rhs
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) y[i] -= f.lower[i * n + j] * y[j];
  }
  for (std::size_t i = 0; i < n; ++i) y[i] /= f.diag[i];
  // L^T z = y'
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) y[i] -= f.lower[j * n + i] * y[j];
  }
  Vector out = Vector::zero(n);
  for (std::size_t i = 0; i < n; ++i) out[f.perm[i]] = y[i];
  return out;
}

}  // namespace

Vector solve_spd(const SymMatrix& m, const Vector& rhs) {
  if (m.size() != rhs.dim()) {
    throw DimensionMismatch("solve_spd: matrix size " +
                            std::to_string(m.size()) + " vs rhs length " +
                            std::to_string(rhs.dim()));
  }
  auto f = factorize(m);
  if (!f) {
    throw NotPositiveDefinite("symmetric factorization hit a zero pivot");
  }
  return ldlt_solve(*f, rhs);
}

bool is_positive_definite(const SymMatrix& m) {
  return factorize(m).has_value();
}

bool is_linearly_independent(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return true;
  return is_positive_definite(gram_matrix(vectors));
}

bool is_affinely_independent(const std::vector<Vector>& points) {
  if (points.empty()) {
    throw InvalidArgument("is_affinely_independent needs at least one point");
  }
  for (const Vector& p : points) require_same_dim(points.front(), p);
  if (points.size() == 1) return true;
  std::vector<Vector> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    diffs.push_back(points[i] - points[0]);
  }
  return is_linearly_independent(diffs);
}

}  // namespace visicone
