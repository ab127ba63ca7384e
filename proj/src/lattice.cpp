#include "bsl/lattice.hpp"

#include <algorithm>
#include <charconv>

#include "bsl/error.hpp"

namespace bsl {

EVec EVec::basis(Index i, const mpz_class& k) {
  EVec v;
  v.add(i, k);
  return v;
}

mpz_class EVec::coeff(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index j) { return e.first < j; });
  return it != entries_.end() && it->first == i ? it->second : mpz_class(0);
}

void EVec::add(Index i, const mpz_class& k) {
  if (k == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index j) { return e.first < j; });
  if (it != entries_.end() && it->first == i) {
    it->second += k;
    if (it->second == 0) entries_.erase(it);
  } else {
    entries_.insert(it, Entry{i, k});
  }
}

EVec& EVec::operator+=(const EVec& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      mpz_class s = a->second + b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
  return *this;
}

EVec& EVec::operator-=(const EVec& other) { return *this += -other; }

EVec& EVec::operator*=(const mpz_class& k) {
  if (k == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.second *= k;
  return *this;
}

EVec EVec::operator-() const {
  EVec r = *this;
  for (auto& e : r.entries_) e.second = -e.second;
  return r;
}

bool operator<(const EVec& a, const EVec& b) {
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                      b.entries_.end());
}

std::string EVec::to_string() const {
  std::string s;
  for (const auto& [i, k] : entries_) {
    if (!s.empty()) s += ' ';
    s += 'e';
    s += std::to_string(i);
    if (k != 1) {
      s += '^';
      s += k.get_str();
    }
  }
  return s;
}

EVec EVec::parse(std::string_view text, std::size_t base_offset) {
  EVec v;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t') {
      ++pos;
      continue;
    }
    std::size_t end = text.find_first_of(" \t", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    if (tok[0] != 'e') throw ParseError(base_offset + pos, "expected e<i>");
    std::size_t caret = tok.find('^');
    std::string_view idx = tok.substr(1, caret == std::string_view::npos ? tok.npos : caret - 1);
    Index i = 0;
    auto [p, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), i);
    if (idx.empty() || ec != std::errc() || p != idx.data() + idx.size())
      throw ParseError(base_offset + pos + 1 + static_cast<std::size_t>(p - idx.data()), "bad basis index");
    mpz_class k = 1;
    if (caret != std::string_view::npos) {
      std::string_view ks = tok.substr(caret + 1);
      std::size_t koff = base_offset + pos + caret + 1;
      std::size_t j = (!ks.empty() && ks[0] == '-') ? 1 : 0;
      if (j == ks.size()) throw ParseError(koff + j, "expected exponent");
      for (std::size_t t = j; t < ks.size(); ++t)
        if (ks[t] < '0' || ks[t] > '9') throw ParseError(koff + t, "bad exponent");
      k = mpz_class(std::string(ks), 10);
      if (k == 0) throw ParseError(koff, "zero exponent");
    }
    v.add(i, k);
    pos = end;
  }
  return v;
}

GroupCtx::GroupCtx(MarkedGroupSpec spec, std::optional<std::size_t> budget)
    : spec_(spec), digits_(std::make_shared<RDigitStream>(std::move(spec), budget)) {}

GroupCtx GroupCtx::clone() const {
  GroupCtx c = *this;
  c.digits_ = std::make_shared<RDigitStream>(*digits_);
  return c;
}

std::vector<IntPoly> GroupCtx::p_polys(std::size_t h) const {
  auto r = digits_->prefix(h);
  std::vector<IntPoly> out;
  out.reserve(h + 1);
  out.push_back(IntPoly::constant(m()));
  for (std::size_t k = 1; k <= h; ++k) out.push_back(out.back().shifted(1) - IntPoly::constant(r[k - 1]));
  return out;
}

mpz_class digit_pairing(const GroupCtx& ctx, const EVec& x) {
  mpz_class s = 0;
  for (const auto& [i, k] : x.entries()) {
    if (i == 0)
      s += k;
    else if (long r = ctx.r(i); r != 0)
      s += k * r;
  }
  return s;
}

bool subgroup_membership(const GroupCtx& ctx, const EVec& x, Subgroup which) {
  if (which == Subgroup::E1) return x.is_zero() || x.entries().front().first != 0;
  return mpz_divisible_ui_p(digit_pairing(ctx, x).get_mpz_t(), static_cast<unsigned long>(ctx.m())) != 0;
}

EVec phi_apply(const GroupCtx& ctx, const EVec& x, Direction direction) {
  if (direction == Direction::Down) {
    if (!subgroup_membership(ctx, x, Subgroup::E1))
      throw PinchDomainViolation("down-shift needs an element of E_1, got " + x.to_string());
    EVec out;
    mpz_class c0 = 0;
    for (const auto& [i, k] : x.entries()) {
      if (i == 1)
        c0 += k * ctx.m();
      else if (long r = ctx.r(i - 1); r != 0)
        c0 -= k * r;
      if (i >= 2) out.add(i - 1, k);
    }
    out.add(0, c0);
    return out;
  }
  mpz_class s = digit_pairing(ctx, x);
  if (mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(ctx.m())) == 0)
    throw PinchDomainViolation("up-shift needs an element of E_{m,xi}, got " + x.to_string());
  mpz_divexact_ui(s.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(ctx.m()));
  EVec out;
  out.add(1, s);
  for (const auto& [i, k] : x.entries())
    if (i >= 1) out.add(i + 1, k);
  return out;
}

std::optional<EVec> a_conjugate(const GroupCtx& ctx, const EVec& x, long n) {
  EVec y = x;
  const Subgroup need = n > 0 ? Subgroup::EmXi : Subgroup::E1;
  const Direction dir = n > 0 ? Direction::Up : Direction::Down;
  for (long step = 0; step < (n < 0 ? -n : n); ++step) {
    if (!subgroup_membership(ctx, y, need)) return std::nullopt;
    y = phi_apply(ctx, y, dir);
  }
  return y;
}

IntPoly q_poly(const GroupCtx& ctx, const EVec& x) {
  if (x.is_zero()) return {};
  auto p = ctx.p_polys(x.max_index());
  IntPoly q;
  for (const auto& [i, k] : x.entries()) {
    if (i == 0)
      q += IntPoly::constant(k);
    else
      q += p[i - 1].shifted(1) * k;
  }
  return q;
}

FixedInterval fixed_interval(const GroupCtx& ctx, const EVec& x, std::size_t cap) {
  if (x.is_zero()) throw ZeroElement("fixed interval of the zero element");
  FixedInterval out;
  out.nu = q_poly(ctx, x).valuation();
  EVec y = x;
  while (out.mu < cap && subgroup_membership(ctx, y, Subgroup::EmXi)) {
    y = phi_apply(ctx, y, Direction::Up);
    ++out.mu;
  }
  out.cap_reached = out.mu >= cap;
  return out;
}

}  // namespace bsl
