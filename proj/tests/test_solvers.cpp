#include "visicone/solvers.hpp"

#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "visicone/errors.hpp"

using namespace visicone;
using test::close;
using test::random_point;

TEST_CASE("nnls recovers nonnegative combinations") {
  // b = 2*a0 + 3*a1 exactly.
  const std::vector<Vector> cols{Vector{1, 0, 0}, Vector{0, 1, 0}};
  NnlsResult r = nnls(cols, Vector{2, 3, 0}, 100);
  CHECK(close(r.coeffs[0], 2.0, 1e-12));
  CHECK(close(r.coeffs[1], 3.0, 1e-12));
  CHECK(r.residual <= 1e-12);
}

TEST_CASE("nnls clips negative directions to zero") {
  const std::vector<Vector> cols{Vector{1, 0}, Vector{0, 1}};
  NnlsResult r = nnls(cols, Vector{-1.0, 2.0}, 100);
  CHECK(r.coeffs[0] == 0.0);
  CHECK(close(r.coeffs[1], 2.0, 1e-12));
  CHECK(close(r.residual, 1.0, 1e-12));
}

TEST_CASE("nnls tolerates duplicate and zero columns") {
  const std::vector<Vector> cols{Vector{1, 1}, Vector{1, 1}, Vector{0, 0}};
  NnlsResult r = nnls(cols, Vector{2, 2}, 100);
  CHECK(r.residual <= 1e-10);
  for (double c : r.coeffs) CHECK(c >= 0.0);
}

TEST_CASE("nnls residual matches brute force on random instances") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 3;
    std::vector<Vector> cols;
    for (int i = 0; i < 4; ++i) cols.push_back(random_point(rng, d, 1.0));
    const Vector b = random_point(rng, d, 2.0);
    NnlsResult r = nnls(cols, b, 500);

    // Dense nonnegative grid over the coefficients as an independent check.
    double best = norm(b);
    const int steps = 12;
    const double top = 3.0;
    std::vector<int> k(4, 0);
    while (true) {
      Vector p = Vector::zero(d);
      for (int i = 0; i < 4; ++i) {
        const double w = top * k[i] / steps;
        for (std::size_t c = 0; c < d; ++c) p[c] += w * cols[i][c];
      }
      best = std::min(best, distance(p, b));
      int idx = 0;
      while (idx < 4 && ++k[idx] > steps) k[idx++] = 0;
      if (idx == 4) break;
    }
    CHECK(r.residual <= best + 1e-9);
  }
}

TEST_CASE("nearest_hull_point solves the square example exactly") {
  const std::vector<Vector> square{Vector{0, 0}, Vector{1, 0}, Vector{1, 1},
                                   Vector{0, 1}};
  HullPointResult r = nearest_hull_point(square, Vector{2.0, 0.5}, 200);
  CHECK(close(r.point, Vector{1.0, 0.5}, 1e-12));
  CHECK(close(r.distance, 1.0, 1e-12));
  CHECK(r.weights[0] <= 1e-12);
  CHECK(close(r.weights[1], 0.5, 1e-10));
  CHECK(close(r.weights[2], 0.5, 1e-10));
  CHECK(r.weights[3] <= 1e-12);
  double sum = 0.0;
  for (double w : r.weights) sum += w;
  CHECK(close(sum, 1.0, 1e-10));
}

TEST_CASE("nearest_hull_point handles singletons and membership") {
  const Vector v{0.25, -1.5};
  HullPointResult single = nearest_hull_point({v}, v, 10);
  CHECK(close(single.weights[0], 1.0));
  CHECK(single.distance <= 1e-15);

  const std::vector<Vector> square{Vector{0, 0}, Vector{1, 0}, Vector{1, 1},
                                   Vector{0, 1}};
  HullPointResult inside = nearest_hull_point(square, Vector{0.25, 0.25}, 200);
  CHECK(inside.distance <= 1e-10);
}

TEST_CASE("nearest_hull_point weights always form a distribution") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + trial % 4;
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < d + 3; ++i) pts.push_back(random_point(rng, d, 1.0));
    const Vector target = random_point(rng, d, 2.5);
    HullPointResult r = nearest_hull_point(pts, target, 50 * pts.size());
    double sum = 0.0;
    for (double w : r.weights) {
      CHECK(w >= 0.0);
      sum += w;
    }
    CHECK(close(sum, 1.0, 1e-10));

    Vector recombined = Vector::zero(d);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t c = 0; c < d; ++c) recombined[c] += r.weights[i] * pts[i][c];
    }
    CHECK(close(recombined, r.point, 1e-9));
    CHECK(close(distance(r.point, target), r.distance, 1e-9));
  }
}
