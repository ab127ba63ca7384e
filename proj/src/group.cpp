#include "bsl/group.hpp"

#include <map>

#include "bsl/error.hpp"
#include "bsl/intsolve.hpp"

namespace bsl {

Letter Letter::inverse() const {
  if (is_a()) return Letter::a(-exp);
  return Letter::base(-x);
}

GroupWord& GroupWord::append(const GroupWord& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return GroupWord(std::move(out));
}

namespace {

// Token expansion: A letters become (-1, exp); Base letters one token per entry.
struct Token {
  long index;  // -1 for a stable letter
  mpz_class k;
  friend bool operator==(const Token&, const Token&) = default;
};

std::vector<Token> expand(const GroupWord& w) {
  std::vector<Token> out;
  for (const auto& l : w.letters()) {
    if (l.is_a())
      out.push_back({-1, l.exp});
    else
      for (const auto& [i, k] : l.x.entries()) out.push_back({static_cast<long>(i), k});
  }
  return out;
}

}  // namespace

bool operator==(const GroupWord& u, const GroupWord& v) { return expand(u) == expand(v); }

GroupWord parse_word(std::string_view text, WordMode mode) {
  GroupWord w;
  if (mode == WordMode::Compact) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      switch (text[i]) {
        case 'a': w.push_a(1); break;
        case 'A': w.push_a(-1); break;
        case 'b': w.push_base(EVec::basis(0, 1)); break;
        case 'B': w.push_base(EVec::basis(0, -1)); break;
        default: throw ParseError(i, std::string("invalid symbol '") + text[i] + "'");
      }
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t') {
      ++pos;
      continue;
    }
    std::size_t end = text.find_first_of(" \t", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    if (tok == "a")
      w.push_a(1);
    else if (tok == "a^-1")
      w.push_a(-1);
    else if (tok[0] == 'e')
      w.push_base(EVec::parse(tok, pos));
    else
      throw ParseError(pos, "invalid token '" + std::string(tok) + "'");
    pos = end;
  }
  return w;
}

bool is_compact_expressible(const GroupWord& w) {
  for (const auto& l : w.letters())
    if (!l.is_a() && !l.x.is_zero() && (l.x.entries().size() != 1 || l.x.entries().front().first != 0))
      return false;
  return true;
}

std::string format_word(const GroupWord& w, WordMode mode) {
  std::string s;
  if (mode == WordMode::Compact) {
    for (const auto& l : w.letters()) {
      if (l.is_a()) {
        s += l.exp > 0 ? 'a' : 'A';
        continue;
      }
      if (l.x.is_zero()) continue;
      if (l.x.entries().size() != 1 || l.x.entries().front().first != 0)
        throw ShapeMismatch("letter " + l.x.to_string() + " has no compact spelling");
      const mpz_class& k = l.x.entries().front().second;
      if (!k.fits_slong_p()) throw ShapeMismatch("exponent too large for compact spelling");
      long n = k.get_si();
      s.append(static_cast<std::size_t>(n < 0 ? -n : n), n < 0 ? 'B' : 'b');
    }
    return s;
  }
  for (const auto& l : w.letters()) {
    std::string tok = l.is_a() ? (l.exp > 0 ? "a" : "a^-1") : l.x.to_string();
    if (tok.empty()) continue;
    if (!s.empty()) s += ' ';
    s += tok;
  }
  return s;
}

GroupWord word_from_codes(std::span<const std::uint8_t> codes) {
  GroupWord w;
  for (auto c : codes) {
    switch (c) {
      case kLa: w.push_a(1); break;
      case kLA: w.push_a(-1); break;
      case kLb: w.push_base(EVec::basis(0, 1)); break;
      default: w.push_base(EVec::basis(0, -1)); break;
    }
  }
  return w;
}

std::string codes_to_string(std::span<const std::uint8_t> codes) {
  static constexpr char kChars[] = {'a', 'A', 'b', 'B'};
  std::string s;
  s.reserve(codes.size());
  for (auto c : codes) s += kChars[c & 3];
  return s;
}

long ReducedForm::sigma() const {
  long s = 0;
  for (int d : deltas) s += d;
  return s;
}

GroupWord ReducedForm::to_word() const {
  GroupWord w;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (!segments[i].is_zero()) w.push_base(segments[i]);
    if (i < deltas.size()) w.push_a(deltas[i]);
  }
  return w;
}

std::string NormalForm::key() const {
  std::string k;
  for (std::size_t i = 0; i < form.segments.size(); ++i) {
    for (const auto& [j, c] : form.segments[i].entries()) {
      k += std::to_string(j);
      k += ':';
      k += c.get_str();
      k += ',';
    }
    if (i < form.deltas.size()) k += form.deltas[i] > 0 ? '+' : '-';
  }
  return k;
}

void Reducer::push_a(int delta) {
  if (!deltas_.empty() && deltas_.back() == -delta) {
    const EVec& x = segments_.back();
    const bool pinch = delta < 0 ? subgroup_membership(*ctx_, x, Subgroup::EmXi)
                                 : subgroup_membership(*ctx_, x, Subgroup::E1);
    if (pinch) {
      EVec y = x.is_zero() ? EVec{} : phi_apply(*ctx_, x, delta < 0 ? Direction::Up : Direction::Down);
      segments_.pop_back();
      deltas_.pop_back();
      segments_.back() += y;
      return;
    }
  }
  deltas_.push_back(delta);
  segments_.emplace_back();
}

void Reducer::push_base(const EVec& x) { segments_.back() += x; }

void Reducer::push_e0(long k) { segments_.back().add(0, k); }

void Reducer::push(const Letter& l) {
  if (l.is_a())
    push_a(l.exp);
  else
    push_base(l.x);
}

void Reducer::push(const GroupWord& w) {
  for (const auto& l : w.letters()) push(l);
}

void Reducer::push_codes(std::span<const std::uint8_t> codes) {
  for (auto c : codes) {
    switch (c) {
      case kLa: push_a(1); break;
      case kLA: push_a(-1); break;
      case kLb: push_e0(1); break;
      default: push_e0(-1); break;
    }
  }
}

void Reducer::clear() {
  segments_.assign(1, EVec{});
  deltas_.clear();
}

ReducedForm britton_reduce(const GroupCtx& ctx, const GroupWord& w) {
  Reducer r(ctx);
  r.push(w);
  return r.form();
}

bool is_trivial(const GroupCtx& ctx, const GroupWord& w) {
  Reducer r(ctx);
  r.push(w);
  return r.is_identity();
}

bool is_trivial_codes(const GroupCtx& ctx, std::span<const std::uint8_t> codes) {
  Reducer r(ctx);
  r.push_codes(codes);
  return r.is_identity();
}

NormalForm normalize(const GroupCtx& ctx, ReducedForm r) {
  const unsigned long m = static_cast<unsigned long>(ctx.m());
  for (std::size_t i = r.deltas.size(); i >= 1; --i) {
    EVec& x = r.segments[i];
    if (x.is_zero()) continue;
    EVec rep;
    if (r.deltas[i - 1] > 0) {
      mpz_class j;
      mpz_fdiv_r_ui(j.get_mpz_t(), digit_pairing(ctx, x).get_mpz_t(), m);
      rep.add(0, j);
    } else {
      rep.add(0, x.coeff(0));
    }
    EVec rest = x - rep;
    x = std::move(rep);
    if (!rest.is_zero())
      r.segments[i - 1] += phi_apply(ctx, rest, r.deltas[i - 1] > 0 ? Direction::Up : Direction::Down);
  }
  return NormalForm{std::move(r)};
}

NormalForm normal_form(const GroupCtx& ctx, const GroupWord& w) { return normalize(ctx, britton_reduce(ctx, w)); }

namespace {

// Moves the trailing segment to the front: x_l * form * (-x_l).
void absorb_tail(ReducedForm& f, GroupWord& conj) {
  if (f.deltas.empty() || f.segments.back().is_zero()) return;
  EVec tail = std::move(f.segments.back());
  f.segments.back() = EVec{};
  conj.push_base(-tail);
  f.segments.front() += tail;
}

bool wrap_pinches(const GroupCtx& ctx, const ReducedForm& f) {
  if (f.deltas.size() < 2) return false;
  const int first = f.deltas.front(), last = f.deltas.back();
  if (first != -last) return false;
  return last > 0 ? subgroup_membership(ctx, f.segments.front(), Subgroup::EmXi)
                  : subgroup_membership(ctx, f.segments.front(), Subgroup::E1);
}

}  // namespace

CyclicReduction cyclic_reduce(const GroupCtx& ctx, const GroupWord& w) {
  CyclicReduction out;
  out.core = britton_reduce(ctx, w);
  absorb_tail(out.core, out.conjugator);
  while (wrap_pinches(ctx, out.core)) {
    const int d = out.core.deltas.back();
    Reducer r(ctx);
    r.push_a(d);
    r.push(out.core.to_word());
    r.push_a(-d);
    out.core = r.form();
    out.conjugator.push_a(-d);
    absorb_tail(out.core, out.conjugator);
  }
  return out;
}

namespace {

// Vector of affine forms in the unknowns: component index -> [constant, coefficients...].
class AffineVec {
 public:
  explicit AffineVec(std::size_t nvar) : nvar_(nvar) {}

  std::vector<mpz_class>& at(EVec::Index i) {
    auto [it, inserted] = comps_.try_emplace(i);
    if (inserted) it->second.assign(nvar_ + 1, 0);
    return it->second;
  }
  void add_const(const EVec& x, int sign) {
    for (const auto& [i, k] : x.entries()) at(i)[0] += sign * k;
  }
  const std::map<EVec::Index, std::vector<mpz_class>>& comps() const { return comps_; }
  std::size_t nvar() const { return nvar_; }

 private:
  std::size_t nvar_;
  std::map<EVec::Index, std::vector<mpz_class>> comps_;
};

void axpy(std::vector<mpz_class>& dst, const std::vector<mpz_class>& src, const mpz_class& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < src.size(); ++i)
    if (src[i] != 0) dst[i] += k * src[i];
}

struct LinearSystem {
  IntMatrix a;
  std::vector<mpz_class> b;
  // Row is [constant, coefficients]; records coefficients . z + constant = 0.
  void add(const std::vector<mpz_class>& row) {
    bool any = false;
    for (std::size_t i = 1; i < row.size(); ++i) any = any || row[i] != 0;
    if (!any && row[0] == 0) return;
    a.emplace_back(row.begin() + 1, row.end());
    b.push_back(-row[0]);
  }
};

}  // namespace

std::optional<EVec> base_conjugacy_solve(const GroupCtx& ctx, const ReducedForm& u, const ReducedForm& v) {
  const std::size_t l = u.deltas.size();
  if (l == 0 || u.deltas != v.deltas || u.segments.size() != l + 1 || v.segments.size() != l + 1)
    throw ShapeMismatch("need forms with equal positive t-length and the same delta sequence");

  EVec::Index support = 0;
  for (const auto& f : {&u, &v})
    for (const auto& s : f->segments) support = std::max(support, s.max_index());
  const std::size_t k_max = support + l + 1 + 4;
  std::size_t n_aux = 0;
  for (int d : u.deltas) n_aux += d < 0 ? 1 : 0;
  const std::size_t nvar = k_max + 1 + n_aux;
  const long m = ctx.m();

  LinearSystem sys;
  AffineVec d(nvar);
  for (std::size_t i = 0; i <= k_max; ++i) d.at(static_cast<EVec::Index>(i))[1 + i] = 1;
  d.add_const(v.segments[0], 1);
  d.add_const(u.segments[0], -1);

  std::size_t next_aux = k_max + 1;
  for (std::size_t j = 1; j <= l; ++j) {
    AffineVec nd(nvar);
    if (u.deltas[j - 1] > 0) {
      // a^-1 d a: d must lie in E_1.
      for (const auto& [i, row] : d.comps()) {
        if (i == 0) {
          sys.add(row);
        } else if (i == 1) {
          axpy(nd.at(0), row, m);
        } else {
          axpy(nd.at(0), row, -ctx.r(i - 1));
          axpy(nd.at(i - 1), row, 1);
        }
      }
    } else {
      // a d a^-1: pairing(d) = m t for a fresh integer t, image t e_1 + shift(d).
      const std::size_t t = next_aux++;
      std::vector<mpz_class> eq(nvar + 1);
      for (const auto& [i, row] : d.comps()) {
        axpy(eq, row, i == 0 ? mpz_class(1) : mpz_class(ctx.r(i)));
        if (i >= 1) axpy(nd.at(i + 1), row, 1);
      }
      eq[1 + t] -= m;
      sys.add(eq);
      nd.at(1)[1 + t] += 1;
    }
    nd.add_const(v.segments[j], 1);
    nd.add_const(u.segments[j], -1);
    d = std::move(nd);
  }
  // Closing the loop: pass(d_l) + y_l - e - x_l = 0.
  for (std::size_t i = 0; i <= k_max; ++i) d.at(static_cast<EVec::Index>(i))[1 + i] -= 1;
  for (const auto& [i, row] : d.comps()) sys.add(row);

  auto z = solve_integer_system(sys.a, sys.b, nvar);
  if (!z) return std::nullopt;
  EVec e;
  for (std::size_t i = 0; i <= k_max; ++i) e.add(static_cast<EVec::Index>(i), (*z)[i]);
  return e;
}

namespace {

GroupWord a_power(long n) {
  GroupWord w;
  for (long i = 0; i < (n < 0 ? -n : n); ++i) w.push_a(n < 0 ? -1 : 1);
  return w;
}

bool verifies(const GroupCtx& ctx, const GroupWord& g, const GroupWord& v, const GroupWord& w) {
  return is_trivial(ctx, g * w * g.inverse() * v.inverse());
}

}  // namespace

std::optional<GroupWord> are_conjugate(const GroupCtx& ctx, const GroupWord& v, const GroupWord& w) {
  const CyclicReduction cv = cyclic_reduce(ctx, v);
  const CyclicReduction cw = cyclic_reduce(ctx, w);
  const std::size_t l = cv.core.t_length();
  if (l != cw.core.t_length()) return std::nullopt;

  auto finish = [&](const GroupWord& h) -> std::optional<GroupWord> {
    GroupWord g = cv.conjugator * h * cw.conjugator.inverse();
    if (!verifies(ctx, g, v, w)) return std::nullopt;
    return g;
  };

  if (l == 0) {
    const EVec& y = cv.core.segments.front();
    const EVec& x = cw.core.segments.front();
    if (x.is_zero() || y.is_zero()) {
      if (x.is_zero() && y.is_zero()) return finish(GroupWord{});
      return std::nullopt;
    }
    const long n = q_poly(ctx, y).degree() - q_poly(ctx, x).degree();
    auto shifted = a_conjugate(ctx, x, n);
    if (!shifted || !(*shifted == y)) return std::nullopt;
    return finish(a_power(n));
  }

  // Rotations P_k^-1 core_w P_k with P_k = y_0 a^{d_1} ... y_{k-1} a^{d_k}.
  const ReducedForm& core = cw.core;
  for (std::size_t k = 0; k < l; ++k) {
    ReducedForm rot;
    rot.segments.clear();
    for (std::size_t j = 0; j < l; ++j) {
      const std::size_t idx = (k + j) % l;
      rot.segments.push_back(core.segments[idx]);
      rot.deltas.push_back(core.deltas[idx]);
    }
    rot.segments.emplace_back();
    if (rot.deltas != cv.core.deltas) continue;
    auto e = base_conjugacy_solve(ctx, cv.core, rot);
    if (!e) continue;
    GroupWord p;
    for (std::size_t j = 0; j < k; ++j) {
      if (!core.segments[j].is_zero()) p.push_base(core.segments[j]);
      p.push_a(core.deltas[j]);
    }
    GroupWord h;
    if (!e->is_zero()) h.push_base(*e);
    h.append(p.inverse());
    if (auto g = finish(h)) return g;
  }
  return std::nullopt;
}

SigmaTLength sigma_and_tlength(const GroupCtx& ctx, const GroupWord& w) {
  SigmaTLength out;
  for (const auto& l : w.letters())
    if (l.is_a()) out.sigma += l.exp;
  out.tlen = britton_reduce(ctx, w).t_length();
  return out;
}

GroupWord b_word(const GroupCtx& ctx, std::size_t i) {
  GroupWord w;
  w.push_base(EVec::basis(0, 1));
  if (i == 0) return w;
  w = GroupWord{};
  w.push_a(1);
  for (long j = 0; j < ctx.m(); ++j) w.push_base(EVec::basis(0, 1));
  w.push_a(-1);
  for (std::size_t k = 2; k <= i; ++k) {
    GroupWord next;
    next.push_a(1);
    next.append(w);
    for (long j = 0; j < ctx.r(k - 1); ++j) next.push_base(EVec::basis(0, -1));
    next.push_a(-1);
    w = std::move(next);
  }
  return w;
}

GroupWord to_compact(const GroupCtx& ctx, const GroupWord& w) {
  GroupWord out;
  for (const auto& l : w.letters()) {
    if (l.is_a()) {
      out.push_a(l.exp);
      continue;
    }
    for (const auto& [i, k] : l.x.entries()) {
      GroupWord bi = b_word(ctx, i);
      GroupWord piece = k > 0 ? bi : bi.inverse();
      mpz_class n = abs(k);
      for (mpz_class c = 0; c < n; ++c) out.append(piece);
    }
  }
  return out;
}

GroupWord commutator(const GroupWord& x, const GroupWord& y) { return x * y * x.inverse() * y.inverse(); }

}  // namespace bsl
