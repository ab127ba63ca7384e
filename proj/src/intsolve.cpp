#include "bsl/intsolve.hpp"

#include <cstddef>
#include <utility>

namespace bsl {

namespace {

// col_j -= q * col_k over both the working matrix and the transform.
void column_axpy(IntMatrix& h, IntMatrix& u, std::size_t j, std::size_t k, const mpz_class& q) {
  for (auto& row : h) row[j] -= q * row[k];
  for (auto& row : u) row[j] -= q * row[k];
}

void column_swap(IntMatrix& h, IntMatrix& u, std::size_t j, std::size_t k) {
  for (auto& row : h) std::swap(row[j], row[k]);
  for (auto& row : u) std::swap(row[j], row[k]);
}

}  // namespace

std::optional<std::vector<mpz_class>> solve_integer_system(const IntMatrix& a, const std::vector<mpz_class>& b,
                                                           std::size_t cols) {
  const std::size_t rows = a.size();
  IntMatrix h = a;
  IntMatrix u(cols, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

  // pivot_col[i] is the pivot column of row i, or cols if the row has none.
  std::vector<std::size_t> pivot_col(rows, cols);
  std::size_t pc = 0;
  for (std::size_t i = 0; i < rows && pc < cols; ++i) {
    auto& row = h[i];
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = pc; j < cols; ++j)
        if (row[j] != 0 && (best == cols || abs(row[j]) < abs(row[best]))) best = j;
      if (best == cols) break;
      if (best != pc) column_swap(h, u, best, pc);
      bool done = true;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (row[j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), row[j].get_mpz_t(), row[pc].get_mpz_t());
        column_axpy(h, u, j, pc, q);
        if (row[j] != 0) done = false;
      }
      if (done) break;
    }
    if (row[pc] != 0) pivot_col[i] = pc++;
  }

  std::vector<mpz_class> y(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class rest = b[i];
    const std::size_t limit = pivot_col[i] == cols ? pc : pivot_col[i];
    for (std::size_t j = 0; j < limit; ++j)
      if (h[i][j] != 0) rest -= h[i][j] * y[j];
    if (pivot_col[i] == cols) {
      if (rest != 0) return std::nullopt;
      continue;
    }
    const mpz_class& p = h[i][pivot_col[i]];
    if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) == 0) return std::nullopt;
    mpz_divexact(y[pivot_col[i]].get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
  }

  std::vector<mpz_class> z(cols);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < pc; ++j)
      if (u[i][j] != 0 && y[j] != 0) z[i] += u[i][j] * y[j];
  return z;
}

}  // namespace bsl
