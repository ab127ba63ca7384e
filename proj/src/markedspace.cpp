#include "bsl/markedspace.hpp"

#include <map>
#include <numeric>

#include "bsl/error.hpp"

namespace bsl {

namespace {

void push_b_power(GroupWord& w, long k) {
  for (long i = 0; i < (k < 0 ? -k : k); ++i) w.push_base(EVec::basis(0, k < 0 ? -1 : 1));
}

}  // namespace

GroupWord relator_b(const GroupCtx& ctx, std::size_t i) {
  if (i == 0) throw PreconditionViolated("relator indices start at 1");
  return b_word(ctx, i);
}

GroupWord relator_bracket(const GroupCtx& ctx, std::size_t i) {
  return commutator(parse_word("b"), relator_b(ctx, i));
}

GroupWord relator_w(long m, std::span<const long> t) {
  GroupWord w;
  for (std::size_t i = 0; i <= t.size(); ++i) w.push_a(1);
  push_b_power(w, m);
  w.push_a(-1);
  for (long tj : t) {
    push_b_power(w, -tj);
    w.push_a(-1);
  }
  return w;
}

GroupWord relator_win_e(long m, std::span<const long> t) {
  std::vector<long> neg(t.begin(), t.end());
  for (auto& x : neg) x = -x;
  GroupWord w = relator_w(m, t);
  push_b_power(w, 1);
  w.append(relator_w(-m, neg));
  push_b_power(w, -1);
  return w;
}

GroupWord relator_v(long k) {
  GroupWord x;
  x.push_a(1);
  push_b_power(x, k);
  x.push_a(-1);
  return commutator(x, parse_word("b"));
}

std::optional<Distinguishing> shortest_distinguishing(const MarkedGroupSpec& g1, const MarkedGroupSpec& g2,
                                                      std::size_t max_len, ExecPolicy policy,
                                                      CandidateStats* stats) {
  if (max_len == 0) throw PreconditionViolated("max_len must be at least 1");
  const GroupCtx c1(g1), c2(g2);
  // Both groups map onto Z wr Z by the same assignment a -> (0,1), b -> (1,0),
  // so a word with nontrivial image there is nontrivial in both and is skipped
  // before any Britton reduction.
  auto make_pred = [&]() -> CodePredicate {
    GroupCtx l1 = c1.clone(), l2 = c2.clone();
    return [l1, l2, lamp = std::vector<long>()](std::span<const std::uint8_t> w) mutable {
      const long n = static_cast<long>(w.size());
      lamp.assign(static_cast<std::size_t>(2 * n + 1), 0);
      long pos = n;
      for (auto c : w) {
        if (c == kLa)
          ++pos;
        else if (c == kLA)
          --pos;
        else
          lamp[static_cast<std::size_t>(pos)] += c == kLb ? 1 : -1;
      }
      for (long v : lamp)
        if (v != 0) return false;
      return is_trivial_codes(l1, w) != is_trivial_codes(l2, w);
    };
  };
  for (std::size_t len = 1; len <= max_len; ++len) {
    if (auto hit = first_candidate(len, make_pred, policy, stats)) return Distinguishing{len, word_from_codes(*hit)};
  }
  return std::nullopt;
}

namespace {

// Digit stream of a rational parameter, detecting when the state s_i repeats.
struct RationalCycle {
  std::vector<long> digits;  // r_1 .. r_k computed so far
  std::optional<std::pair<std::size_t, std::size_t>> cycle;  // (preperiod, period)
};

RationalCycle rational_cycle(const MarkedGroupSpec& g, std::size_t budget) {
  RationalCycle out;
  const long m = g.m();
  const mpq_class xi = g.xi().value();
  mpq_class s = 1;
  std::map<mpq_class, std::size_t> seen;
  seen.emplace(s, 0);
  RDigitStream digits(g);
  for (std::size_t i = 1; i <= budget; ++i) {
    long r = digits[i];
    out.digits.push_back(r);
    s = (xi * s - r) / m;
    auto [it, fresh] = seen.emplace(s, i);
    if (!fresh) {
      out.cycle = std::make_pair(it->second, i - it->second);
      return out;
    }
  }
  return out;
}

long digit_at(const std::vector<long>& pre, const std::vector<long>& per, std::size_t i) {
  if (i <= pre.size()) return pre[i - 1];
  return per[(i - 1 - pre.size()) % per.size()];
}

bool periodic_equal(const std::vector<long>& pre1, const std::vector<long>& per1, const std::vector<long>& pre2,
                    const std::vector<long>& per2) {
  const std::size_t n = std::max(pre1.size(), pre2.size()) + std::lcm(per1.size(), per2.size());
  for (std::size_t i = 1; i <= n; ++i)
    if (digit_at(pre1, per1, i) != digit_at(pre2, per2, i)) return false;
  return true;
}

}  // namespace

bool isomorphic(const MarkedGroupSpec& g1, const MarkedGroupSpec& g2) {
  using K = XiSpec::Kind;
  if (g1.xi().kind == K::RSeqFinite || g2.xi().kind == K::RSeqFinite)
    throw UndecidableSpec("finite digit sequences cannot be compared in full");
  if (g1.m() != g2.m()) return false;
  const long m = g1.m();
  if (m == 1) return true;

  if (g1.xi().is_rational_kind() && g2.xi().is_rational_kind()) {
    const long d1 = gcd_with_m(g1), d2 = gcd_with_m(g2);
    if (d1 != d2) return false;
    if (m / d1 == 1) return true;
    return g1.xi().value() == g2.xi().value();
  }
  if (!g1.xi().is_rational_kind() && !g2.xi().is_rational_kind())
    return periodic_equal(g1.xi().preperiod, g1.xi().period, g2.xi().preperiod, g2.xi().period);

  const MarkedGroupSpec& rat = g1.xi().is_rational_kind() ? g1 : g2;
  const MarkedGroupSpec& seq = g1.xi().is_rational_kind() ? g2 : g1;
  RationalCycle rc = rational_cycle(rat, kDigitCompareBudget);
  if (rc.cycle) {
    auto [pre_len, per_len] = *rc.cycle;
    std::vector<long> pre(rc.digits.begin(), rc.digits.begin() + static_cast<long>(pre_len));
    std::vector<long> per(rc.digits.begin() + static_cast<long>(pre_len),
                          rc.digits.begin() + static_cast<long>(pre_len + per_len));
    return periodic_equal(pre, per, seq.xi().preperiod, seq.xi().period);
  }
  for (std::size_t i = 1; i <= rc.digits.size(); ++i)
    if (rc.digits[i - 1] != digit_at(seq.xi().preperiod, seq.xi().period, i)) return false;
  throw UndecidableSpec("digit streams agree on " + std::to_string(rc.digits.size()) +
                        " digits but the rational stream did not become periodic");
}

DistanceBounds distance_bounds(const MarkedGroupSpec& g1, const MarkedGroupSpec& g2) {
  if (g1.m() != g2.m()) throw PreconditionViolated("distance bounds need the same m");
  const long d1 = gcd_with_m(g1), d2 = gcd_with_m(g2);
  if (d1 != 1 || d2 != 1)
    throw GcdMismatch("bounds need unit parameters, got gcd " + std::to_string(d1) + " and " + std::to_string(d2));
  const bool decidable = g1.xi().kind != XiSpec::Kind::RSeqFinite && g2.xi().kind != XiSpec::Kind::RSeqFinite;
  if (decidable) {
    bool same = false;
    try {
      same = isomorphic(g1, g2);
    } catch (const UndecidableSpec&) {
    }
    if (same) throw SameGroup(g1.to_string() + " and " + g2.to_string() + " are the same marked group");
  }
  RDigitStream s1(g1), s2(g2);
  for (std::size_t i = 1; i <= kDigitCompareBudget; ++i) {
    if (s1[i] != s2[i]) {
      DistanceBounds b;
      b.h = i - 1;
      const long m = g1.m();
      b.lower_exp = 2 * (m + 1) * static_cast<long>(b.h + 1) + 2 * m + 6;
      b.upper_exp = 2 * static_cast<long>(b.h) + 1;
      return b;
    }
  }
  throw SameGroup("no differing digit within " + std::to_string(kDigitCompareBudget) + " digits");
}

WordOracle limit_oracle(const MarkedGroupSpec& spec) {
  GroupCtx ctx(spec);
  return [ctx](const GroupWord& w) { return is_trivial(ctx, w); };
}

RecoveredParameters recover_parameters(const WordOracle& oracle, std::size_t n, long max_m) {
  RecoveredParameters out;
  for (long k = 1; k <= max_m && out.m_abs == 0; ++k)
    if (oracle(relator_v(k))) out.m_abs = k;
  if (out.m_abs == 0) throw OracleInconsistent("no v_k with k <= " + std::to_string(max_m) + " is trivial");
  for (std::size_t i = 1; i <= n; ++i) {
    std::optional<long> digit;
    std::vector<long> t = out.digits;
    t.push_back(0);
    for (long c = 0; c < out.m_abs; ++c) {
      t.back() = c;
      if (!oracle(relator_win_e(out.m_abs, t))) continue;
      if (digit) throw OracleInconsistent("two digits qualify at level " + std::to_string(i));
      digit = c;
    }
    if (!digit) throw OracleInconsistent("no digit qualifies at level " + std::to_string(i));
    out.digits.push_back(*digit);
  }
  return out;
}

}  // namespace bsl
