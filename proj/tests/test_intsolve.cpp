#include <random>

#include "bsl/intsolve.hpp"
#include "doctest.h"

using namespace bsl;

namespace {

bool satisfies(const IntMatrix& a, const std::vector<mpz_class>& b, const std::vector<mpz_class>& z) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < z.size(); ++j) s += a[i][j] * z[j];
    if (s != b[i]) return false;
  }
  return true;
}

// Exhaustive search over z in [-lim, lim]^cols.
bool brute_force_solvable(const IntMatrix& a, const std::vector<mpz_class>& b, std::size_t cols, long lim) {
  std::vector<mpz_class> z(cols, -lim);
  while (true) {
    if (satisfies(a, b, z)) return true;
    std::size_t k = 0;
    while (k < cols && z[k] == lim) z[k++] = -lim;
    if (k == cols) return false;
    ++z[k];
  }
}

}  // namespace

TEST_CASE("solvable and unsolvable hand systems") {
  // 2x + 4y = 6 has solutions, 2x + 4y = 3 has none.
  IntMatrix a{{2, 4}};
  auto z = solve_integer_system(a, {6}, 2);
  REQUIRE(z);
  CHECK(satisfies(a, {6}, *z));
  CHECK_FALSE(solve_integer_system(a, {3}, 2));
  // Rational but not integral: x + y = 1, x - y = 0.
  CHECK_FALSE(solve_integer_system({{1, 1}, {1, -1}}, {1, 0}, 2));
  // Inconsistent rows.
  CHECK_FALSE(solve_integer_system({{1, 2}, {2, 4}}, {1, 3}, 2));
  // Zero matrix.
  CHECK(solve_integer_system({{0, 0}}, {0}, 2));
  CHECK_FALSE(solve_integer_system({{0, 0}}, {1}, 2));
  // No rows at all.
  CHECK(solve_integer_system({}, {}, 3));
}

TEST_CASE("random systems agree with exhaustive search") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> coef(-3, 3), rhs(-4, 4);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  int solvable = 0;
  for (int t = 0; t < 400; ++t) {
    std::size_t rows = dim(rng), cols = dim(rng);
    IntMatrix a(rows, std::vector<mpz_class>(cols));
    std::vector<mpz_class> b(rows);
    for (auto& row : a)
      for (auto& x : row) x = coef(rng);
    // Half of the right-hand sides come from a small planted solution.
    if (t % 2 == 0) {
      std::vector<mpz_class> z0(cols);
      for (auto& x : z0) x = coef(rng);
      for (std::size_t i = 0; i < rows; ++i) {
        b[i] = 0;
        for (std::size_t j = 0; j < cols; ++j) b[i] += a[i][j] * z0[j];
      }
    } else {
      for (auto& x : b) x = rhs(rng);
    }
    auto z = solve_integer_system(a, b, cols);
    if (z) {
      ++solvable;
      CHECK(satisfies(a, b, *z));
    } else {
      // Any solution of these tiny systems would show up within this box.
      CHECK_FALSE(brute_force_solvable(a, b, cols, 12));
    }
    if (t % 2 == 0) CHECK(z.has_value());
  }
  CHECK(solvable > 200);
}

TEST_CASE("large coefficients") {
  mpz_class big("123456789012345678901234567890");
  IntMatrix a{{big, big + 1}};
  auto z = solve_integer_system(a, {mpz_class(7)}, 2);
  REQUIRE(z);
  CHECK(satisfies(a, {7}, *z));
}
