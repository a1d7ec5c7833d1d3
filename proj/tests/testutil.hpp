#pragma once

#include <cmath>
#include <random>

#include "visicone/vectorspace.hpp"

namespace visicone::test {

inline bool close(double a, double b, double tol = 1e-12) {
  return std::abs(a - b) <= tol;
}

inline bool close(const Vector& a, const Vector& b, double tol = 1e-12) {
  return a.dim() == b.dim() && distance(a, b) <= tol;
}

inline Vector random_point(std::mt19937_64& rng, std::size_t d,
                           double half_width) {
  std::uniform_real_distribution<double> unif(-half_width, half_width);
  std::vector<double> c(d);
  for (double& ci : c) ci = unif(rng);
  return Vector(std::move(c));
}

}  // namespace visicone::test
