#include <random>
#include <set>

#include "bsl/error.hpp"
#include "bsl/lattice.hpp"
#include "doctest.h"

using namespace bsl;

namespace {

GroupCtx ctx_int(long m, long n) { return GroupCtx(MarkedGroupSpec(m, XiSpec::integer(n))); }

EVec ev(std::string_view s) { return EVec::parse(s); }

// Small vectors with support in e_0..e_3 and coefficients in [-lim, lim].
std::vector<EVec> small_vectors(long lim) {
  std::vector<EVec> out;
  const long w = 2 * lim + 1;
  long total = w * w * w * w;
  for (long code = 0; code < total; ++code) {
    EVec x;
    long c = code;
    for (EVec::Index i = 0; i < 4; ++i) {
      x.add(i, c % w - lim);
      c /= w;
    }
    out.push_back(x);
  }
  return out;
}

// q(x) evaluated directly from the digit recurrence: X P_{i-1}(X) expanded by hand.
IntPoly q_oracle(long m, const std::vector<long>& r, const EVec& x) {
  std::vector<mpz_class> acc(x.max_index() + 2, 0);
  for (const auto& [i, k] : x.entries()) {
    if (i == 0) {
      acc[0] += k;
      continue;
    }
    // X P_{i-1} = m X^i - r_1 X^{i-1} - ... - r_{i-1} X
    acc[i] += k * m;
    for (std::size_t j = 1; j < i; ++j) acc[i - j] -= k * r[j - 1];
  }
  return IntPoly(acc);
}

}  // namespace

TEST_CASE("EVec text form") {
  CHECK(ev("e0^2 e3^-1").to_string() == "e0^2 e3^-1");
  CHECK(ev("e3^-1 e0 e0").to_string() == "e0^2 e3^-1");
  CHECK(ev("").is_zero());
  CHECK(ev("e1 e1^-1").is_zero());
  CHECK(ev("e5^7").coeff(5) == 7);
  CHECK_THROWS_AS(ev("e"), ParseError);
  CHECK_THROWS_AS(ev("e1^0"), ParseError);
  CHECK_THROWS_AS(ev("f1"), ParseError);
  CHECK_THROWS_AS(ev("e1^"), ParseError);
}

TEST_CASE("EVec arithmetic keeps no zero entries") {
  EVec x = ev("e0 e2^3");
  EVec y = ev("e0^-1 e1");
  EVec z = x + y;
  CHECK(z == ev("e1 e2^3"));
  CHECK(z.entries().size() == 2);
  CHECK((x - x).is_zero());
  CHECK((x * 0).is_zero());
  CHECK(-x == ev("e0^-1 e2^-3"));
}

TEST_CASE("subgroup membership examples") {
  auto c = ctx_int(2, 3);
  CHECK(subgroup_membership(c, ev("e1 e0^-1"), Subgroup::EmXi));
  CHECK_FALSE(subgroup_membership(c, ev("e0"), Subgroup::E1));
  CHECK(subgroup_membership(c, ev("e1^3 e0^-1"), Subgroup::EmXi));
  CHECK_FALSE(subgroup_membership(c, ev("e0"), Subgroup::EmXi));
  CHECK(subgroup_membership(c, ev("e4"), Subgroup::E1));
}

TEST_CASE("phi examples") {
  auto c = ctx_int(2, 3);
  CHECK(phi_apply(c, ev("e1"), Direction::Down) == ev("e0^2"));
  CHECK(phi_apply(c, ev("e2"), Direction::Down) == ev("e1 e0^-1"));
  CHECK(phi_apply(c, ev("e0^2"), Direction::Up) == ev("e1"));
  CHECK_THROWS_AS(phi_apply(c, ev("e0"), Direction::Down), PinchDomainViolation);
  CHECK_THROWS_AS(phi_apply(c, ev("e0"), Direction::Up), PinchDomainViolation);
}

TEST_CASE("a-conjugation examples") {
  auto c = ctx_int(2, 3);
  CHECK(a_conjugate(c, ev("e0^2"), 1) == ev("e1"));
  CHECK_FALSE(a_conjugate(c, ev("e0"), 1).has_value());
  CHECK(a_conjugate(c, ev("e1"), -1) == ev("e0^2"));
  CHECK(a_conjugate(c, ev("e3"), 0) == ev("e3"));
}

TEST_CASE("q examples") {
  auto c = ctx_int(2, 3);
  CHECK(q_poly(c, ev("e0")) == IntPoly{1});
  CHECK(q_poly(c, ev("e1")) == IntPoly{0, 2});
  CHECK(q_poly(c, ev("e2")) == IntPoly{0, -1, 2});
  CHECK(q_poly(c, EVec{}).is_zero());
}

TEST_CASE("fixed interval examples") {
  auto c = ctx_int(2, 3);
  auto f = fixed_interval(c, ev("e0"), 10);
  CHECK(f.mu == 0);
  CHECK(f.nu == 0);
  CHECK_FALSE(f.cap_reached);
  f = fixed_interval(c, ev("e1"), 10);
  CHECK(f.mu == 0);
  CHECK(f.nu == 1);
  f = fixed_interval(c, ev("e0^2"), 10);
  CHECK(f.mu == 1);
  CHECK(f.nu == 0);
  CHECK_THROWS_AS(fixed_interval(c, EVec{}, 10), ZeroElement);
  // xi = 0: m^k e_0 shifts up k times and e_i lies in E_{m,0} for every i >= 1.
  auto z = ctx_int(2, 0);
  f = fixed_interval(z, ev("e1"), 10);
  CHECK(f.cap_reached);
  CHECK(f.mu >= 10);
}

TEST_CASE("down and up are mutually inverse") {
  for (long m : {2, 3, 4}) {
    for (long n : {0L, 1L, 3L, -5L, 7L}) {
      auto c = ctx_int(m, n);
      for (const auto& x : small_vectors(2)) {
        if (subgroup_membership(c, x, Subgroup::E1)) {
          EVec y = phi_apply(c, x, Direction::Down);
          CHECK(subgroup_membership(c, y, Subgroup::EmXi));
          CHECK(phi_apply(c, y, Direction::Up) == x);
        }
        if (subgroup_membership(c, x, Subgroup::EmXi)) {
          EVec y = phi_apply(c, x, Direction::Up);
          CHECK(subgroup_membership(c, y, Subgroup::E1));
          CHECK(phi_apply(c, y, Direction::Down) == x);
        }
      }
    }
  }
}

TEST_CASE("q intertwines the shifts with multiplication by X") {
  auto c = ctx_int(3, 5);
  for (const auto& x : small_vectors(2)) {
    if (subgroup_membership(c, x, Subgroup::E1)) {
      CHECK(q_poly(c, phi_apply(c, x, Direction::Down)).shifted(1) == q_poly(c, x));
    }
    if (subgroup_membership(c, x, Subgroup::EmXi)) {
      CHECK(q_poly(c, phi_apply(c, x, Direction::Up)) == q_poly(c, x).shifted(1));
    }
  }
}

TEST_CASE("q is additive, injective and matches the expanded formula") {
  auto c = ctx_int(2, 3);
  auto r = c.digits().prefix(6);
  auto vs = small_vectors(3);
  std::set<std::vector<mpz_class>> seen;
  for (const auto& x : vs) {
    IntPoly q = q_poly(c, x);
    CHECK(q == q_oracle(2, r, x));
    seen.insert(q.coeffs());
  }
  CHECK(seen.size() == vs.size());
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
  for (int t = 0; t < 500; ++t) {
    const auto& x = vs[pick(rng)];
    const auto& y = vs[pick(rng)];
    CHECK(q_poly(c, x + y) == q_poly(c, x) + q_poly(c, y));
  }
}

TEST_CASE("E_{m,xi} is a subgroup of index m with coset representatives j e_0") {
  for (long m : {2, 3, 5}) {
    auto c = ctx_int(m, 7);
    auto vs = small_vectors(2);
    for (std::size_t i = 0; i < vs.size(); i += 7) {
      const auto& x = vs[i];
      int hits = 0;
      for (long j = 0; j < m; ++j)
        if (subgroup_membership(c, x - EVec::basis(0, j), Subgroup::EmXi)) ++hits;
      CHECK(hits == 1);
      if (subgroup_membership(c, x, Subgroup::EmXi)) {
        CHECK(subgroup_membership(c, -x, Subgroup::EmXi));
        const auto& y = vs[(i * 31 + 5) % vs.size()];
        CHECK(subgroup_membership(c, x + y, Subgroup::EmXi) == subgroup_membership(c, y, Subgroup::EmXi));
      }
    }
  }
}

TEST_CASE("a-conjugation round trips") {
  auto c = ctx_int(2, 1);
  for (const auto& x : small_vectors(2)) {
    for (long n : {-3L, -1L, 1L, 2L, 3L}) {
      auto y = a_conjugate(c, x, n);
      if (!y) continue;
      CHECK(a_conjugate(c, *y, -n) == x);
    }
  }
}

TEST_CASE("fixed interval nu is the X-adic valuation of q") {
  auto c = ctx_int(3, 2);
  for (const auto& x : small_vectors(1)) {
    if (x.is_zero()) continue;
    auto f = fixed_interval(c, x, 16);
    CHECK(f.nu == q_poly(c, x).valuation());
    // mu up-shifts are available and (below the cap) the next one is not.
    CHECK(a_conjugate(c, x, static_cast<long>(f.mu)).has_value());
    if (!f.cap_reached) CHECK_FALSE(a_conjugate(c, x, static_cast<long>(f.mu) + 1).has_value());
  }
}

TEST_CASE("digit reads stay within the support") {
  GroupCtx c(MarkedGroupSpec(2, XiSpec::finite({1, 0, 1})));
  CHECK(subgroup_membership(c, ev("e3 e0"), Subgroup::EmXi));
  CHECK(q_poly(c, ev("e3")) == IntPoly{0, 0, -1, 2});
  CHECK_THROWS_AS(subgroup_membership(c, ev("e4"), Subgroup::EmXi), RDigitBudgetExceeded);
}
