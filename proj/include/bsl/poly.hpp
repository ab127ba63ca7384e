#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace bsl {

/// Dense polynomial in X with integer coefficients, constant term first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Largest k with X^k dividing the polynomial; undefined (returns 0) for zero.
  std::size_t valuation() const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(std::size_t i) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const mpz_class& k);
  IntPoly shifted(std::size_t k) const;  // multiply by X^k

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const mpz_class& k) { return a *= k; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

/// Element of Z[X, X^-1]: coefficient i multiplies X^(offset + i).
/// Normalized: empty, or first and last coefficients nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long offset, std::vector<mpz_class> coeffs);
  explicit LaurentPoly(const IntPoly& p);

  bool is_zero() const { return coeffs_.empty(); }
  long offset() const { return offset_; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff_at(long exponent) const;
  long min_exponent() const { return offset_; }
  long max_exponent() const { return offset_ + static_cast<long>(coeffs_.size()) - 1; }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly operator-() const;
  LaurentPoly shifted(long k) const;  // multiply by X^k

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Polynomial part when no negative exponents occur.
  bool is_polynomial() const { return is_zero() || offset_ >= 0; }
  IntPoly to_int_poly() const;

  std::string to_string() const;

 private:
  void normalize();
  long offset_ = 0;
  std::vector<mpz_class> coeffs_;
};

}  // namespace bsl
