#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace bsl {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Some integer solution z of A z = b, or nothing if the system has none.
/// A is rows x cols (every row must have `cols` entries).
///
/// Column-style Hermite reduction: unimodular column operations bring A to a
/// lower echelon H = A U, then H y = b is solved by forward substitution with
/// divisibility checks and z = U y.
std::optional<std::vector<mpz_class>> solve_integer_system(const IntMatrix& a, const std::vector<mpz_class>& b,
                                                           std::size_t cols);

}  // namespace bsl
