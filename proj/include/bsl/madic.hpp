#pragma once

// m-adic parameters of the limit groups and the digit functions r_i, s_i.
//
// A parameter xi in Z_m is described finitely: an integer, a rational with
// denominator prime to m, or an explicit (finite or eventually periodic)
// digit sequence r_1, r_2, ...  The digits satisfy
//
//     xi * s_{i-1} = m * s_i + r_i,   r_i in {0, ..., |m|-1},   s_0 = 1,
//
// and together with m they determine the marked group.

#include <gmpxx.h>

#include <cstddef>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bsl/poly.hpp"

namespace bsl {

struct XiSpec {
  enum class Kind { Int, Rat, RSeqFinite, RSeqPeriodic };

  Kind kind = Kind::Int;
  mpz_class num = 0;  // Int value, or Rat numerator
  mpz_class den = 1;  // Rat denominator (positive, lowest terms)
  std::vector<long> preperiod;  // RSeqFinite digits, or the preperiod
  std::vector<long> period;     // RSeqPeriodic only

  static XiSpec integer(const mpz_class& n);
  static XiSpec rational(const mpz_class& p, const mpz_class& q);
  static XiSpec finite(std::vector<long> digits);
  static XiSpec periodic(std::vector<long> preperiod, std::vector<long> period);

  bool is_rational_kind() const { return kind == Kind::Int || kind == Kind::Rat; }
  /// The value as a rational (Int and Rat kinds only).
  mpq_class value() const;
  XiSpec negated() const;

  friend bool operator==(const XiSpec&, const XiSpec&) = default;
};

/// Grammar: int:<n> | rat:<p>/<q> | rseq:<d1>,...,<dk> | rseq:<pre...>;<per...>
XiSpec parse_xi(std::string_view text);
std::string format_xi(const XiSpec& xi);

/// (m, xi) identifying BS-bar(m, xi). Stored normalized as (|m|, sign(m) * xi).
class MarkedGroupSpec {
 public:
  MarkedGroupSpec(long m, XiSpec xi);

  long m() const { return m_; }
  long original_m() const { return original_m_; }
  const XiSpec& xi() const { return xi_; }
  /// RSeq with r_1 sharing a factor with m: accepted, but no xi is known to realize it.
  bool unverified_realizability() const;

  std::string to_string() const;

  friend bool operator==(const MarkedGroupSpec& a, const MarkedGroupSpec& b) {
    return a.m_ == b.m_ && a.xi_ == b.xi_;
  }

 private:
  long m_;
  long original_m_;
  XiSpec xi_;
};

/// Lazily computed, memoized digits r_1, r_2, ...  Safe to share across threads.
class RDigitStream {
 public:
  explicit RDigitStream(MarkedGroupSpec spec, std::optional<std::size_t> budget = std::nullopt);
  RDigitStream(const RDigitStream& other);
  RDigitStream& operator=(const RDigitStream&) = delete;

  const MarkedGroupSpec& spec() const { return spec_; }
  long modulus() const { return spec_.m(); }

  /// r_i for i >= 1.  Throws RDigitBudgetExceeded past the available digits.
  long operator[](std::size_t i) const;
  std::vector<long> prefix(std::size_t count) const;
  /// Number of digits that can ever be produced, if finite.
  std::optional<std::size_t> limit() const;

 private:
  void extend_locked(std::size_t count) const;

  MarkedGroupSpec spec_;
  std::optional<std::size_t> budget_;
  mutable std::mutex mu_;
  mutable std::vector<long> cache_;
  mutable mpz_class int_state_;  // s_i for Int specs
  mutable mpq_class rat_state_;  // s_i for Rat specs
};

std::vector<long> r_digits(const MarkedGroupSpec& spec, std::size_t count);
/// s_1, ..., s_count (Int and Rat specs only).
std::vector<mpq_class> s_values(const MarkedGroupSpec& spec, std::size_t count);
/// gcd(|m|, r_1), with gcd(|m|, 0) = |m|.
long gcd_with_m(const MarkedGroupSpec& spec);
/// P_0, ..., P_h with P_0 = m and P_k = X P_{k-1} - r_k.
std::vector<IntPoly> p_polys(const MarkedGroupSpec& spec, std::size_t h);
/// (m/d, pi(xi/d)) for d = gcd_with_m(spec).
MarkedGroupSpec project_unit(const MarkedGroupSpec& spec);

struct Residue {
  mpz_class value;
  mpz_class modulus;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// The unique unit residue modulo |m|^h whose first h digits are `prefix`.
Residue xi_from_prefix(long m, std::span<const long> prefix);

/// Digits of an integer n with respect to modulus |m| (plain recurrence).
std::vector<long> integer_digits(long m, const mpz_class& n, std::size_t count);

}  // namespace bsl
