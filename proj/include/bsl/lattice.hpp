#pragma once

// The base group E = Z e_0 + Z e_1 + ... of the HNN model, its two associated
// subgroups E_1 (no e_0 term) and E_{m,xi} (index |m|), and the partial
// isomorphism between them realized by conjugation with a.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bsl/madic.hpp"
#include "bsl/poly.hpp"

namespace bsl {

/// Finitely supported integer vector over e_0, e_1, ...  Entries are sorted by
/// index and never hold a zero coefficient, so equality is structural.
class EVec {
 public:
  using Index = std::uint32_t;
  using Entry = std::pair<Index, mpz_class>;

  EVec() = default;
  static EVec basis(Index i, const mpz_class& k = 1);

  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  mpz_class coeff(Index i) const;
  /// Largest index in the support (0 for the zero vector).
  Index max_index() const { return entries_.empty() ? 0 : entries_.back().first; }

  void add(Index i, const mpz_class& k);
  EVec& operator+=(const EVec& other);
  EVec& operator-=(const EVec& other);
  EVec& operator*=(const mpz_class& k);
  EVec operator-() const;

  friend EVec operator+(EVec a, const EVec& b) { return a += b; }
  friend EVec operator-(EVec a, const EVec& b) { return a -= b; }
  friend EVec operator*(EVec a, const mpz_class& k) { return a *= k; }
  friend bool operator==(const EVec& a, const EVec& b) = default;
  friend bool operator<(const EVec& a, const EVec& b);

  /// `e0^2 e3^-1`; the zero vector formats as the empty string.
  std::string to_string() const;
  static EVec parse(std::string_view text, std::size_t base_offset = 0);

 private:
  std::vector<Entry> entries_;
};

/// A marked group together with its (shared, memoized) digit stream.
class GroupCtx {
 public:
  explicit GroupCtx(MarkedGroupSpec spec, std::optional<std::size_t> budget = std::nullopt);
  /// Copy with a private digit memo (avoids lock traffic between worker threads).
  GroupCtx clone() const;

  const MarkedGroupSpec& spec() const { return spec_; }
  long m() const { return spec_.m(); }
  long r(std::size_t i) const { return (*digits_)[i]; }
  const RDigitStream& digits() const { return *digits_; }
  /// P_0, ..., P_h for this group.
  std::vector<IntPoly> p_polys(std::size_t h) const;

 private:
  MarkedGroupSpec spec_;
  std::shared_ptr<RDigitStream> digits_;
};

enum class Subgroup { E1, EmXi };
enum class Direction { Down, Up };

/// beta_0 + sum_{i>=1} beta_i r_i as an exact integer.
mpz_class digit_pairing(const GroupCtx& ctx, const EVec& x);

bool subgroup_membership(const GroupCtx& ctx, const EVec& x, Subgroup which);

/// Down: a^-1 x a for x in E_1.  Up: a x a^-1 for x in E_{m,xi}.
EVec phi_apply(const GroupCtx& ctx, const EVec& x, Direction direction);

/// a^n x a^-n if every intermediate step stays in the required subgroup.
std::optional<EVec> a_conjugate(const GroupCtx& ctx, const EVec& x, long n);

/// beta_0 + sum_{i>=1} beta_i X P_{i-1}(X).
IntPoly q_poly(const GroupCtx& ctx, const EVec& x);

struct FixedInterval {
  std::size_t mu = 0;
  bool cap_reached = false;  // mu >= cap; the true value may be larger or infinite
  std::size_t nu = 0;
};

FixedInterval fixed_interval(const GroupCtx& ctx, const EVec& x, std::size_t cap = 64);

}  // namespace bsl
