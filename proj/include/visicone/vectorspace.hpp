#pragma once

#include <cstddef>
#include <vector>

#include "visicone/errors.hpp"

namespace visicone {

/// Dense real coordinate vector in a fixed ambient dimension d >= 1.
///
/// Coordinates are validated to be finite at construction. Vectors only
/// interoperate when their dimensions match; mixed-dimension arithmetic
/// throws DimensionMismatch.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<double> coords);
  Vector(std::initializer_list<double> coords);

  static Vector zero(std::size_t dim);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<double>& coords() const { return coords_; }

  bool operator==(const Vector& other) const = default;

 private:
  std::vector<double> coords_;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double s, const Vector& a);

double dot(const Vector& a, const Vector& b);
double norm_sq(const Vector& a);
double norm(const Vector& a);
double distance(const Vector& a, const Vector& b);

/// lambda * x + (1 - lambda) * v, the segment parametrization used by all
/// visibility scans (lambda = 0 is v, lambda = 1 is x).
Vector mix(const Vector& x, const Vector& v, double lambda);

void require_same_dim(const Vector& a, const Vector& b);

/// Square real matrix stored fully but kept exactly symmetric: set(i, j)
/// writes both mirror entries with the same value.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  double at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double value);

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Gram matrix of the given vectors: entry (i, j) = <v_i, v_j>.
SymMatrix gram_matrix(const std::vector<Vector>& vectors);

/// Symmetric positive definite solve via diagonally pivoted LDL^T.
/// A pivot below 1e-12 times the largest diagonal entry throws
/// NotPositiveDefinite; that is the library's rank decision, shared by the
/// independence tests below so the two can never disagree.
Vector solve_spd(const SymMatrix& m, const Vector& rhs);

/// True when the pivoted factorization of m completes, i.e. m is
/// numerically positive definite.
bool is_positive_definite(const SymMatrix& m);

/// True when the vectors are linearly independent (Gram factorizable).
/// An empty list is vacuously independent.
bool is_linearly_independent(const std::vector<Vector>& vectors);

/// True when the difference vectors from points[0] are linearly
/// independent. A single point is affinely independent.
bool is_affinely_independent(const std::vector<Vector>& points);

}  // namespace visicone
