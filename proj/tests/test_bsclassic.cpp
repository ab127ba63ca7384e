#include <random>

#include "bsl/bsclassic.hpp"
#include "bsl/enumerate.hpp"
#include "bsl/error.hpp"
#include "doctest.h"

using namespace bsl;

namespace {

// Affine image a -> (x -> (q/p) x), b -> (x -> x + 1) over Q.  Faithful when p = 1.
bool affine_trivial(long p, long q, std::span<const std::uint8_t> codes) {
  mpq_class scale = 1, shift = 0;  // x -> scale * x + shift
  mpq_class ratio(q, p);
  ratio.canonicalize();
  for (auto c : codes) {
    // Compose on the right: g(x) then apply letter first (left action on words read left to right).
    mpq_class ls = 1, lt = 0;
    if (c == kLa) ls = ratio;
    if (c == kLA) ls = 1 / ratio;
    if (c == kLb) lt = 1;
    if (c == kLB) lt = -1;
    // (scale, shift) o (ls, lt): x -> scale * (ls x + lt) + shift
    shift += scale * lt;
    scale *= ls;
  }
  return scale == 1 && shift == 0;
}

Codes random_codes(std::mt19937& rng, std::size_t len) {
  std::uniform_int_distribution<int> letter(0, 3);
  Codes c(len);
  for (auto& x : c) x = static_cast<std::uint8_t>(letter(rng));
  return c;
}

}  // namespace

TEST_CASE("classical word problem examples") {
  BSSpec bs(2, 3);
  CHECK(bs_is_trivial(bs, BSWord::parse("ab^2Ab^-3")));
  CHECK(bs_is_trivial(bs, parse_word("abbABBB")));
  CHECK_FALSE(bs_is_trivial(bs, commutator(parse_word("abA"), parse_word("b"))));
  CHECK(bs_is_trivial(bs, commutator(parse_word("b"), parse_word("abbA"))));
  CHECK(bs_is_trivial(bs, BSWord{}));
  CHECK_THROWS(BSSpec(0, 2));
}

TEST_CASE("run-length words") {
  BSWord x = BSWord::parse("ab^2Ab^-3");
  CHECK(x.to_string() == "ab^2a^-1b^-3");
  CHECK(BSWord::parse("abbBBA").to_string().empty());
  CHECK(BSWord::parse("a^5a^-2").to_string() == "a^3");
  BSWord big = BSWord::parse("b^123456789012345678901234567890");
  CHECK(big.blocks().front().exp == mpz_class("123456789012345678901234567890"));
  CHECK(x.inverse().to_string() == "b^3ab^-2a^-1");
  CHECK_THROWS_AS(BSWord::parse("ac"), ParseError);
  CHECK_THROWS_AS(BSWord::parse("b^"), ParseError);
}

TEST_CASE("BS(1,q) agrees with its faithful affine representation") {
  for (long q : {2L, 3L, -2L}) {
    BSSpec bs(1, q);
    for (const auto& codes : reduced_words_up_to(7)) {
      CHECK(bs_is_trivial(bs, word_from_codes(codes)) == affine_trivial(1, q, codes));
    }
  }
}

TEST_CASE("trivial words have trivial affine image") {
  std::mt19937 rng(11);
  for (auto [p, q] : {std::pair{2L, 3L}, std::pair{2L, 4L}, std::pair{3L, -5L}}) {
    BSSpec bs(p, q);
    std::size_t trivial = 0;
    for (const auto& codes : reduced_words_up_to(8)) {
      if (bs_is_trivial(bs, word_from_codes(codes))) {
        ++trivial;
        CHECK(affine_trivial(p, q, codes));
      }
    }
    CHECK(trivial >= 1);
    // Products of conjugates of the relator are trivial.
    GroupWord rel = parse_word("a") * parse_word(std::string(static_cast<std::size_t>(p), 'b'));
    rel.push_a(-1);
    for (long i = 0; i < std::labs(q); ++i) rel.push_base(EVec::basis(0, q > 0 ? -1 : 1));
    for (int t = 0; t < 100; ++t) {
      GroupWord g = word_from_codes(random_codes(rng, 6)), h = word_from_codes(random_codes(rng, 6));
      GroupWord x = g * rel * g.inverse() * h * rel.inverse() * h.inverse();
      CHECK(bs_is_trivial(bs, x));
      GroupWord u = word_from_codes(random_codes(rng, 7)), v = word_from_codes(random_codes(rng, 7));
      CHECK(bs_is_trivial(bs, u * v) == bs_is_trivial(bs, v * u));
    }
  }
}

TEST_CASE("N(k) examples") {
  auto r = bs_n_of_k(2, 4, 1);
  CHECK(r.n_steps == 1);
  CHECK(r.alpha == 2);
  r = bs_n_of_k(2, 4, 2);
  CHECK(r.n_steps == 3);
  CHECK(r.alpha == 2);
  r = bs_n_of_k(2, 6, 1);
  CHECK(r.n_steps == 1);
  CHECK(r.alpha == 2);
  CHECK_THROWS_AS(bs_n_of_k(4, 2, 1), PreconditionViolated);
  CHECK_THROWS_AS(bs_n_of_k(2, 6, 0), PreconditionViolated);
  CHECK_THROWS_AS(bs_n_of_k(3, -3, 1), PreconditionViolated);
}

TEST_CASE("max prime exponent") {
  CHECK(max_prime_exponent(1) == 0);
  CHECK(max_prime_exponent(2) == 1);
  CHECK(max_prime_exponent(12) == 2);
  CHECK(max_prime_exponent(-48) == 4);
  CHECK(max_prime_exponent(30) == 1);
}

TEST_CASE("N(k) is verified by the classical word problem and obeys its bounds") {
  for (auto [m, n] : {std::pair{2L, 4L}, std::pair{2L, 6L}, std::pair{3L, 18L}, std::pair{2L, -8L}}) {
    for (std::size_t k = 1; k <= 6; ++k) {
      auto r = bs_n_of_k(m, n, k);
      CAPTURE(m);
      CAPTURE(n);
      CAPTURE(k);
      mpz_class nk;
      mpz_pow_ui(nk.get_mpz_t(), mpz_class(n).get_mpz_t(), k);
      CHECK(r.alpha % n != 0);
      std::string text = "a^-" + std::to_string(r.n_steps) + "b^" + nk.get_str() + "a^" +
                         std::to_string(r.n_steps) + "b^" + mpz_class(-r.alpha).get_str();
      CHECK(bs_is_trivial(BSSpec(m, n), BSWord::parse(text)));
      CHECK(r.n_steps >= k);
      CHECK(r.n_steps <= (max_prime_exponent(m) + 2) * k);
    }
  }
}

TEST_CASE("classical groups converge to the limit group") {
  // xi_n = 2 mod 27 with |xi_n| >= 27: agreement on words of length <= 6.
  auto limit = GroupCtx(MarkedGroupSpec(3, XiSpec::integer(2)));
  auto words = reduced_words_up_to(6);
  for (long xn : {29L, 56L, -52L}) {
    BSSpec bs(3, xn);
    for (const auto& codes : words) CHECK(bs_is_trivial(bs, word_from_codes(codes)) == is_trivial_codes(limit, codes));
  }
}

TEST_CASE("b_i collapses to a power of b in the classical group") {
  for (auto [m, xn] : {std::pair{2L, 19L}, std::pair{2L, 35L}, std::pair{3L, 29L}, std::pair{3L, -7L}}) {
    MarkedGroupSpec spec(m, XiSpec::integer(xn));
    GroupCtx c(spec);
    auto s = s_values(spec, 6);
    for (std::size_t i = 1; i <= 6; ++i) {
      mpq_class si = i == 1 ? mpq_class(1) : s[i - 2];
      REQUIRE(si.get_den() == 1);
      mpz_class e = -xn * si.get_num();
      BSWord x = BSWord::from_group_word(b_word(c, i));
      BSWord tail;
      tail.push(false, e);
      x.append(tail);
      CHECK(bs_is_trivial(BSSpec(m, xn), x));
    }
  }
}
