#include "bsl/madic.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "bsl/error.hpp"

namespace bsl {

namespace {

mpz_class parse_integer(std::string_view text, std::size_t base_offset, bool allow_sign) {
  if (text.empty()) throw ParseError(base_offset, "expected a decimal integer");
  std::size_t i = 0;
  if (allow_sign && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw ParseError(base_offset + i, "expected digits");
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9') throw ParseError(base_offset + j, "unexpected character");
  std::string s(text.substr(text[0] == '+' ? 1 : 0));
  return mpz_class(s, 10);
}

std::vector<long> parse_digit_list(std::string_view text, std::size_t base_offset) {
  std::vector<long> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (tok.empty()) throw ParseError(base_offset + start, "empty digit");
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok[0] == '-')
      throw ParseError(base_offset + start + static_cast<std::size_t>(ptr - tok.data()), "bad digit");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

void check_digits(const std::vector<long>& digits, long m) {
  for (long d : digits)
    if (d < 0 || d >= m)
      throw InvalidSpec("digit " + std::to_string(d) + " outside [0, " + std::to_string(m) + ")");
}

// r = x mod m for a rational x whose denominator is prime to m.
long rational_residue(const mpq_class& x, long m) {
  mpz_class inv;
  mpz_class mod(m);
  if (mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), mod.get_mpz_t()) == 0 && m != 1)
    throw NonInvertibleDenominator("denominator " + x.get_den().get_str() + " not invertible mod " +
                                   std::to_string(m));
  mpz_class r = x.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return r.get_si();
}

}  // namespace

XiSpec XiSpec::integer(const mpz_class& n) {
  XiSpec x;
  x.kind = Kind::Int;
  x.num = n;
  return x;
}

XiSpec XiSpec::rational(const mpz_class& p, const mpz_class& q) {
  if (q == 0) throw InvalidSpec("rational parameter with zero denominator");
  mpq_class v(p, q);
  v.canonicalize();
  XiSpec x;
  x.kind = Kind::Rat;
  x.num = v.get_num();
  x.den = v.get_den();
  return x;
}

XiSpec XiSpec::finite(std::vector<long> digits) {
  XiSpec x;
  x.kind = Kind::RSeqFinite;
  x.num = 0;
  x.preperiod = std::move(digits);
  return x;
}

XiSpec XiSpec::periodic(std::vector<long> preperiod, std::vector<long> period) {
  if (period.empty()) throw InvalidSpec("periodic digit sequence needs a nonempty period");
  XiSpec x;
  x.kind = Kind::RSeqPeriodic;
  x.num = 0;
  x.preperiod = std::move(preperiod);
  x.period = std::move(period);
  return x;
}

mpq_class XiSpec::value() const {
  if (!is_rational_kind()) throw UnsupportedSpecKind("digit-sequence parameter has no rational value");
  return mpq_class(num, den);
}

XiSpec XiSpec::negated() const {
  if (!is_rational_kind()) throw UnsupportedSpecKind("cannot negate a digit-sequence parameter");
  XiSpec x = *this;
  x.num = -x.num;
  return x;
}

XiSpec parse_xi(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(0, "expected <kind>:<value>");
  std::string_view kind = text.substr(0, colon);
  std::string_view body = text.substr(colon + 1);
  std::size_t off = colon + 1;
  if (kind == "int") return XiSpec::integer(parse_integer(body, off, true));
  if (kind == "rat") {
    auto slash = body.find('/');
    if (slash == std::string_view::npos) throw ParseError(off + body.size(), "expected '/'");
    mpz_class p = parse_integer(body.substr(0, slash), off, true);
    mpz_class q = parse_integer(body.substr(slash + 1), off + slash + 1, true);
    if (q == 0) throw ParseError(off + slash + 1, "zero denominator");
    return XiSpec::rational(p, q);
  }
  if (kind == "rseq") {
    auto semi = body.find(';');
    if (semi == std::string_view::npos) {
      auto digits = parse_digit_list(body, off);
      if (digits.empty()) throw ParseError(off, "empty digit sequence");
      return XiSpec::finite(std::move(digits));
    }
    auto pre = parse_digit_list(body.substr(0, semi), off);
    auto per = parse_digit_list(body.substr(semi + 1), off + semi + 1);
    if (per.empty()) throw ParseError(off + semi + 1, "empty period");
    return XiSpec::periodic(std::move(pre), std::move(per));
  }
  throw ParseError(0, "unknown parameter kind '" + std::string(kind) + "'");
}

std::string format_xi(const XiSpec& xi) {
  switch (xi.kind) {
    case XiSpec::Kind::Int:
      return "int:" + xi.num.get_str();
    case XiSpec::Kind::Rat:
      return "rat:" + xi.num.get_str() + "/" + xi.den.get_str();
    case XiSpec::Kind::RSeqFinite:
      return "rseq:" + join(xi.preperiod);
    case XiSpec::Kind::RSeqPeriodic:
      return "rseq:" + join(xi.preperiod) + ";" + join(xi.period);
  }
  return {};
}

MarkedGroupSpec::MarkedGroupSpec(long m, XiSpec xi) : m_(m < 0 ? -m : m), original_m_(m), xi_(std::move(xi)) {
  if (m == 0) throw InvalidSpec("m must be nonzero");
  switch (xi_.kind) {
    case XiSpec::Kind::Int:
      break;
    case XiSpec::Kind::Rat:
      if (xi_.den == 0) throw InvalidSpec("zero denominator");
      if (gcd(xi_.den, mpz_class(m_)) != 1)
        throw NonInvertibleDenominator("gcd(" + xi_.den.get_str() + ", " + std::to_string(m_) + ") != 1");
      break;
    case XiSpec::Kind::RSeqFinite:
      check_digits(xi_.preperiod, m_);
      break;
    case XiSpec::Kind::RSeqPeriodic:
      if (xi_.period.empty()) throw InvalidSpec("empty period");
      check_digits(xi_.preperiod, m_);
      check_digits(xi_.period, m_);
      break;
  }
  if (m < 0 && xi_.is_rational_kind()) xi_ = xi_.negated();
}

bool MarkedGroupSpec::unverified_realizability() const {
  if (xi_.is_rational_kind()) return false;
  long r1 = 0;
  if (!xi_.preperiod.empty())
    r1 = xi_.preperiod[0];
  else if (!xi_.period.empty())
    r1 = xi_.period[0];
  else
    return false;
  return gcd_long(m_, r1) != 1;
}

std::string MarkedGroupSpec::to_string() const {
  return "(" + std::to_string(m_) + ", " + format_xi(xi_) + ")";
}

RDigitStream::RDigitStream(MarkedGroupSpec spec, std::optional<std::size_t> budget)
    : spec_(std::move(spec)), budget_(budget), int_state_(1), rat_state_(1) {}

RDigitStream::RDigitStream(const RDigitStream& other) : spec_(other.spec_), budget_(other.budget_) {
  std::lock_guard lock(other.mu_);
  cache_ = other.cache_;
  int_state_ = other.int_state_;
  rat_state_ = other.rat_state_;
}

std::optional<std::size_t> RDigitStream::limit() const {
  std::optional<std::size_t> lim = budget_;
  if (spec_.xi().kind == XiSpec::Kind::RSeqFinite) {
    std::size_t n = spec_.xi().preperiod.size();
    lim = lim ? std::min(*lim, n) : n;
  }
  return lim;
}

void RDigitStream::extend_locked(std::size_t count) const {
  const XiSpec& xi = spec_.xi();
  const long m = spec_.m();
  if (auto lim = limit(); lim && count > *lim) throw RDigitBudgetExceeded(*lim + 1);
  cache_.reserve(count);
  while (cache_.size() < count) {
    std::size_t i = cache_.size() + 1;
    long r = 0;
    switch (xi.kind) {
      case XiSpec::Kind::Int: {
        if (m == 1) break;
        mpz_class x = xi.num * int_state_;
        mpz_class rr;
        mpz_fdiv_r_ui(rr.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
        r = rr.get_si();
        int_state_ = x - rr;
        mpz_divexact_ui(int_state_.get_mpz_t(), int_state_.get_mpz_t(), static_cast<unsigned long>(m));
        break;
      }
      case XiSpec::Kind::Rat: {
        if (m == 1) break;
        mpq_class x = mpq_class(xi.num, xi.den) * rat_state_;
        r = rational_residue(x, m);
        rat_state_ = (x - r) / m;
        break;
      }
      case XiSpec::Kind::RSeqFinite:
        r = xi.preperiod[i - 1];
        break;
      case XiSpec::Kind::RSeqPeriodic:
        if (i <= xi.preperiod.size())
          r = xi.preperiod[i - 1];
        else
          r = xi.period[(i - 1 - xi.preperiod.size()) % xi.period.size()];
        break;
    }
    cache_.push_back(r);
  }
}

long RDigitStream::operator[](std::size_t i) const {
  std::lock_guard lock(mu_);
  if (i == 0) throw PreconditionViolated("digit indices start at 1");
  if (i > cache_.size()) extend_locked(i);
  return cache_[i - 1];
}

std::vector<long> RDigitStream::prefix(std::size_t count) const {
  std::lock_guard lock(mu_);
  if (count > cache_.size()) extend_locked(count);
  return {cache_.begin(), cache_.begin() + static_cast<long>(count)};
}

std::vector<long> r_digits(const MarkedGroupSpec& spec, std::size_t count) {
  return RDigitStream(spec).prefix(count);
}

std::vector<mpq_class> s_values(const MarkedGroupSpec& spec, std::size_t count) {
  const XiSpec& xi = spec.xi();
  if (!xi.is_rational_kind()) throw UnsupportedSpecKind("s_i needs an integer or rational parameter");
  const long m = spec.m();
  const mpq_class v = xi.value();
  std::vector<mpq_class> out;
  out.reserve(count);
  mpq_class s = 1;
  for (std::size_t i = 0; i < count; ++i) {
    mpq_class x = v * s;
    long r = m == 1 ? 0 : rational_residue(x, m);
    s = (x - r) / m;
    out.push_back(s);
  }
  return out;
}

long gcd_with_m(const MarkedGroupSpec& spec) {
  long r1 = RDigitStream(spec)[1];
  return gcd_long(spec.m(), r1);
}

std::vector<IntPoly> p_polys(const MarkedGroupSpec& spec, std::size_t h) {
  auto r = r_digits(spec, h);
  std::vector<IntPoly> out;
  out.reserve(h + 1);
  out.push_back(IntPoly::constant(spec.m()));
  for (std::size_t k = 1; k <= h; ++k) out.push_back(out.back().shifted(1) - IntPoly::constant(r[k - 1]));
  return out;
}

MarkedGroupSpec project_unit(const MarkedGroupSpec& spec) {
  long d = gcd_with_m(spec);
  if (d == 1) return spec;
  if (!spec.xi().is_rational_kind())
    throw UnsupportedSpecKind("projection of a digit-sequence parameter with gcd " + std::to_string(d));
  long mhat = spec.m() / d;
  if (mhat == 1) return MarkedGroupSpec(1, XiSpec::integer(0));
  const XiSpec& xi = spec.xi();
  mpz_class p = xi.num;
  mpz_divexact_ui(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  if (xi.kind == XiSpec::Kind::Int) return MarkedGroupSpec(mhat, XiSpec::integer(p));
  return MarkedGroupSpec(mhat, XiSpec::rational(p, xi.den));
}

std::vector<long> integer_digits(long m, const mpz_class& n, std::size_t count) {
  if (m == 0) throw InvalidSpec("m must be nonzero");
  long am = m < 0 ? -m : m;
  std::vector<long> out(count, 0);
  if (am == 1) return out;
  mpz_class s = 1, x, r;
  for (std::size_t i = 0; i < count; ++i) {
    x = n * s;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(am));
    out[i] = r.get_si();
    s = x - r;
    mpz_divexact_ui(s.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(am));
  }
  return out;
}

Residue xi_from_prefix(long m, std::span<const long> prefix) {
  if (m == 0) throw InvalidSpec("m must be nonzero");
  if (prefix.empty()) throw PreconditionViolated("empty digit prefix");
  const long am = m < 0 ? -m : m;
  for (long d : prefix)
    if (d < 0 || d >= am) throw PreconditionViolated("digit " + std::to_string(d) + " out of range");
  if (gcd_long(am, prefix[0]) != 1)
    throw NoUnitRealization("r_1 = " + std::to_string(prefix[0]) + " shares a factor with " + std::to_string(am));
  const std::size_t h = prefix.size();
  mpz_class modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(am), h);
  std::vector<long> want(prefix.begin(), prefix.end());
  // r_1(n) = n mod |m|, so only the residues congruent to prefix[0] can match.
  for (mpz_class n = prefix[0] % am; n < modulus; n += am) {
    if (gcd(n, mpz_class(am)) != 1) continue;
    if (integer_digits(am, n, h) == want) return {n, modulus};
  }
  throw NoUnitRealization("no unit residue realizes the prefix");
}

}  // namespace bsl
