#include "visicone/vectorspace.hpp"

#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "visicone/errors.hpp"

using namespace visicone;
using test::close;
using test::random_point;

TEST_CASE("vector construction validates coordinates") {
  CHECK_THROWS_AS(Vector(std::vector<double>{}), InvalidArgument);
  CHECK_THROWS_AS(Vector({1.0, std::nan("")}), InvalidArgument);
  CHECK_THROWS_AS(Vector({1.0, std::numeric_limits<double>::infinity()}),
                  InvalidArgument);
  CHECK_THROWS_AS(dot(Vector{1.0, 2.0}, Vector{1.0}), DimensionMismatch);
}

TEST_CASE("gram matrix of simple pairs") {
  SymMatrix g1 = gram_matrix({Vector{1, 0}, Vector{0, 1}});
  CHECK(g1.at(0, 0) == 1.0);
  CHECK(g1.at(0, 1) == 0.0);
  CHECK(g1.at(1, 1) == 1.0);

  SymMatrix g2 = gram_matrix({Vector{1, 1}, Vector{1, -1}});
  CHECK(g2.at(0, 0) == 2.0);
  CHECK(g2.at(0, 1) == 0.0);
  CHECK(g2.at(1, 1) == 2.0);

  SymMatrix g3 = gram_matrix({Vector{1, 2}, Vector{2, 4}});
  CHECK(g3.at(0, 0) == 5.0);
  CHECK(g3.at(0, 1) == 10.0);
  CHECK(g3.at(1, 1) == 20.0);
}

TEST_CASE("gram matrix is exactly symmetric as stored") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vector> vs;
    for (int i = 0; i < 5; ++i) vs.push_back(random_point(rng, 6, 2.0));
    SymMatrix g = gram_matrix(vs);
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        CHECK(g.at(i, j) == g.at(j, i));  // bitwise
      }
    }
  }
}

TEST_CASE("solve_spd on small systems") {
  SymMatrix id(2);
  id.set(0, 0, 1.0);
  id.set(1, 1, 1.0);
  CHECK(close(solve_spd(id, Vector{3, 4}), Vector{3, 4}));

  SymMatrix diag(2);
  diag.set(0, 0, 2.0);
  diag.set(1, 1, 2.0);
  CHECK(close(solve_spd(diag, Vector{2, 4}), Vector{1, 2}));

  SymMatrix singular(2);
  singular.set(0, 0, 5.0);
  singular.set(0, 1, 10.0);
  singular.set(1, 1, 20.0);
  CHECK_THROWS_AS(solve_spd(singular, Vector{1, 1}), NotPositiveDefinite);
  CHECK_THROWS_AS(solve_spd(id, Vector{1, 2, 3}), DimensionMismatch);
}

TEST_CASE("solve_spd residuals on random regularized gram systems") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> eps_pick(1e-3, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 8;
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(random_point(rng, n, 1.0));
    SymMatrix m = gram_matrix(cols);
    const double eps = eps_pick(rng);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, m.at(i, i) + eps);
    const Vector rhs = random_point(rng, n, 3.0);
    const Vector x = solve_spd(m, rhs);

    Vector back = Vector::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) back[i] += m.at(i, j) * x[j];
    }
    CHECK(distance(back, rhs) <= 1e-10 * (1.0 + norm(rhs)));
  }
}

TEST_CASE("affine independence basics") {
  CHECK(is_affinely_independent({Vector{0, 0}, Vector{1, 0}, Vector{0, 1}}));
  CHECK_FALSE(
      is_affinely_independent({Vector{0, 0}, Vector{1, 1}, Vector{2, 2}}));
  CHECK(is_affinely_independent({Vector{3.0, -1.0}}));

  // d+2 points in dimension d can never be affinely independent.
  std::mt19937_64 rng(5);
  for (std::size_t d = 1; d <= 5; ++d) {
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < d + 2; ++i) pts.push_back(random_point(rng, d, 1.0));
    CHECK_FALSE(is_affinely_independent(pts));
  }
}

TEST_CASE("affine independence is invariant under cyclic shifts") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 2 + trial % 4;
    const std::size_t count = 2 + trial % 5;  // up to 6 points
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < count; ++i) pts.push_back(random_point(rng, d, 1.0));
    const bool base = is_affinely_independent(pts);
    for (std::size_t shift = 1; shift < count; ++shift) {
      std::vector<Vector> rotated;
      for (std::size_t i = 0; i < count; ++i) {
        rotated.push_back(pts[(i + shift) % count]);
      }
      CHECK(is_affinely_independent(rotated) == base);
    }
  }
}
