#pragma once

// Classical Baumslag-Solitar groups BS(p, q) = <a, b | a b^p a^-1 = b^q>.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bsl/group.hpp"

namespace bsl {

struct BSSpec {
  mpz_class p;
  mpz_class q;
  BSSpec(mpz_class p_, mpz_class q_);
};

/// Run-length word over {a, b}: consecutive equal generators are merged.
class BSWord {
 public:
  struct Block {
    bool is_a;
    mpz_class exp;
  };

  BSWord() = default;
  void push(bool is_a, const mpz_class& exp);
  BSWord& append(const BSWord& other);
  BSWord inverse() const;
  const std::vector<Block>& blocks() const { return blocks_; }

  /// Compact letters plus `a^<n>` / `b^<n>` run tokens, e.g. "ab^2Ab^-3".
  static BSWord parse(std::string_view text);
  /// Compact {a, b} words only (Base letters must be multiples of e_0).
  static BSWord from_group_word(const GroupWord& w);
  std::string to_string() const;

 private:
  std::vector<Block> blocks_;
};

bool bs_is_trivial(const BSSpec& spec, const BSWord& w);
bool bs_is_trivial(const BSSpec& spec, const GroupWord& w);

struct NOfK {
  std::size_t n_steps;  // N(k)
  mpz_class alpha;
};

/// Least N with a^-N b^{n^k} a^N = b^alpha in BS(m, n) and n not dividing alpha.
NOfK bs_n_of_k(long m, long n, std::size_t k);

/// Largest exponent in the prime factorization of |m| (0 for |m| = 1).
unsigned max_prime_exponent(long m);

}  // namespace bsl
