#include "bsl/bsclassic.hpp"

#include <algorithm>

#include "bsl/error.hpp"

namespace bsl {

BSSpec::BSSpec(mpz_class p_, mpz_class q_) : p(std::move(p_)), q(std::move(q_)) {
  if (p == 0 || q == 0) throw InvalidSpec("BS(p, q) needs p, q nonzero");
}

void BSWord::push(bool is_a, const mpz_class& exp) {
  if (exp == 0) return;
  if (!blocks_.empty() && blocks_.back().is_a == is_a) {
    blocks_.back().exp += exp;
    if (blocks_.back().exp == 0) blocks_.pop_back();
    return;
  }
  blocks_.push_back({is_a, exp});
}

BSWord& BSWord::append(const BSWord& other) {
  for (const auto& b : other.blocks_) push(b.is_a, b.exp);
  return *this;
}

BSWord BSWord::inverse() const {
  BSWord w;
  for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it) w.push(it->is_a, -it->exp);
  return w;
}

BSWord BSWord::parse(std::string_view text) {
  BSWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    bool is_a = c == 'a' || c == 'A';
    if (!is_a && c != 'b' && c != 'B') throw ParseError(i, std::string("invalid symbol '") + c + "'");
    if (i + 1 < text.size() && text[i + 1] == '^') {
      if (c == 'A' || c == 'B') throw ParseError(i + 1, "run tokens use lowercase generators");
      std::size_t j = i + 2, start = j;
      if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
      std::size_t digits = j;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      if (j == digits) throw ParseError(digits, "expected exponent");
      std::string num(text.substr(start, j - start));
      if (num[0] == '+') num.erase(0, 1);
      w.push(is_a, mpz_class(num, 10));
      i = j;
      continue;
    }
    w.push(is_a, (c == 'a' || c == 'b') ? 1 : -1);
    ++i;
  }
  return w;
}

BSWord BSWord::from_group_word(const GroupWord& w) {
  BSWord out;
  for (const auto& l : w.letters()) {
    if (l.is_a()) {
      out.push(true, l.exp);
      continue;
    }
    if (l.x.is_zero()) continue;
    if (l.x.entries().size() != 1 || l.x.entries().front().first != 0)
      throw ShapeMismatch("BS(p, q) words use only a and b");
    out.push(false, l.x.entries().front().second);
  }
  return out;
}

std::string BSWord::to_string() const {
  std::string s;
  for (const auto& b : blocks_) {
    s += b.is_a ? 'a' : 'b';
    if (b.exp != 1) s += "^" + b.exp.get_str();
  }
  return s;
}

bool bs_is_trivial(const BSSpec& spec, const BSWord& w) {
  // Stack of b-exponents between stable letters; deltas[i] precedes segs[i+1].
  std::vector<mpz_class> segs(1);
  std::vector<int> deltas;
  auto push_a = [&](int d) {
    if (!deltas.empty() && deltas.back() == -d) {
      const mpz_class& x = segs.back();
      // a b^{kp} a^-1 = b^{kq};  a^-1 b^{kq} a = b^{kp}.
      const mpz_class& from = d < 0 ? spec.p : spec.q;
      const mpz_class& to = d < 0 ? spec.q : spec.p;
      if (mpz_divisible_p(x.get_mpz_t(), from.get_mpz_t()) != 0) {
        mpz_class y;
        mpz_divexact(y.get_mpz_t(), x.get_mpz_t(), from.get_mpz_t());
        y *= to;
        segs.pop_back();
        deltas.pop_back();
        segs.back() += y;
        return;
      }
    }
    deltas.push_back(d);
    segs.emplace_back(0);
  };
  for (const auto& b : w.blocks()) {
    if (!b.is_a) {
      segs.back() += b.exp;
      continue;
    }
    if (!b.exp.fits_slong_p()) throw PreconditionViolated("a-exponent too large");
    long n = b.exp.get_si();
    for (long i = 0; i < (n < 0 ? -n : n); ++i) push_a(n < 0 ? -1 : 1);
  }
  return deltas.empty() && segs.front() == 0;
}

bool bs_is_trivial(const BSSpec& spec, const GroupWord& w) { return bs_is_trivial(spec, BSWord::from_group_word(w)); }

unsigned max_prime_exponent(long m) {
  unsigned long v = static_cast<unsigned long>(m < 0 ? -m : m);
  unsigned best = 0;
  for (unsigned long p = 2; p * p <= v; ++p) {
    unsigned e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    best = std::max(best, e);
  }
  if (v > 1) best = std::max(best, 1u);
  return best;
}

NOfK bs_n_of_k(long m, long n, std::size_t k) {
  if (m == 0 || k == 0) throw PreconditionViolated("need m != 0 and k >= 1");
  if ((m < 0 ? -m : m) >= (n < 0 ? -n : n)) throw PreconditionViolated("need |m| < |n|");
  // Some prime power divides n but not m: some prime p has v_p(n) > v_p(m).
  bool ok = false;
  unsigned long nn = static_cast<unsigned long>(n < 0 ? -n : n), mm = static_cast<unsigned long>(m < 0 ? -m : m);
  for (unsigned long p = 2; p <= nn && !ok; ++p) {
    if (nn % p) continue;
    unsigned vn = 0, vm = 0;
    for (unsigned long t = nn; t % p == 0; t /= p) ++vn;
    for (unsigned long t = mm; t % p == 0; t /= p) ++vm;
    ok = vn > vm;
  }
  if (!ok) throw PreconditionViolated("every prime power dividing n also divides m");
  NOfK out{0, 0};
  mpz_pow_ui(out.alpha.get_mpz_t(), mpz_class(n).get_mpz_t(), k);
  const mpz_class nz(n);
  while (mpz_divisible_p(out.alpha.get_mpz_t(), nz.get_mpz_t()) != 0) {
    mpz_divexact(out.alpha.get_mpz_t(), out.alpha.get_mpz_t(), nz.get_mpz_t());
    out.alpha *= m;
    ++out.n_steps;
  }
  return out;
}

}  // namespace bsl
