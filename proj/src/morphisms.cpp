#include "bsl/morphisms.hpp"

#include <numeric>

#include "bsl/error.hpp"

namespace bsl {

WreathElem WreathElem::inverse() const { return {(-poly).shifted(-shift), -shift}; }

WreathElem& WreathElem::operator*=(const WreathElem& other) {
  poly += other.poly.shifted(shift);
  shift += other.shift;
  return *this;
}

std::string WreathElem::to_string() const { return "(" + poly.to_string() + ", " + std::to_string(shift) + ")"; }

namespace {

// Coefficients that overflow a 64-bit integer are written as decimal strings.
nlohmann::json big_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class big_from_json(const nlohmann::json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>(), 10);
  return mpz_class(j.get<long>());
}

}  // namespace

nlohmann::json wreath_to_json(const WreathElem& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : x.poly.coeffs()) coeffs.push_back(big_to_json(c));
  return {{"poly", {{"offset", x.poly.offset()}, {"coeffs", coeffs}}}, {"shift", x.shift}};
}

WreathElem wreath_from_json(const nlohmann::json& j) {
  std::vector<mpz_class> coeffs;
  for (const auto& c : j.at("poly").at("coeffs")) coeffs.push_back(big_from_json(c));
  return {LaurentPoly(j.at("poly").at("offset").get<long>(), std::move(coeffs)), j.at("shift").get<long>()};
}

WreathElem wreath_image(const GroupCtx& ctx, const GroupWord& w) {
  WreathElem out;
  for (const auto& l : w.letters()) {
    if (l.is_a())
      out *= WreathElem{LaurentPoly{}, l.exp};
    else
      out *= WreathElem{LaurentPoly(q_poly(ctx, l.x)), 0};
  }
  return out;
}

AutSpec parse_aut(std::string_view text) {
  if (text == "J") return AutJ{};
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InvalidAutSpec("expected J, phi:<evec>, theta:<k> or embed:<d>");
  std::string_view kind = text.substr(0, colon);
  std::string body(text.substr(colon + 1));
  if (kind == "phi") return AutPhiE{EVec::parse(body, colon + 1)};
  long v = 0;
  try {
    std::size_t used = 0;
    v = std::stol(body, &used);
    if (used != body.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw InvalidAutSpec("bad integer '" + body + "'");
  }
  if (kind == "theta") return AutThetaK{v};
  if (kind == "embed") return AutEmbedD{v};
  throw InvalidAutSpec("unknown kind '" + std::string(kind) + "'");
}

std::string format_aut(const AutSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AutJ>) return "J";
        if constexpr (std::is_same_v<T, AutPhiE>) return "phi:" + s.e.to_string();
        if constexpr (std::is_same_v<T, AutThetaK>) return "theta:" + std::to_string(s.k);
        if constexpr (std::is_same_v<T, AutEmbedD>) return "embed:" + std::to_string(s.d);
      },
      spec);
}

GroupWord apply_automorphism(const GroupCtx& ctx, const AutSpec& spec, const GroupWord& w) {
  GroupWord out;
  if (std::holds_alternative<AutJ>(spec)) {
    for (const auto& l : w.letters()) {
      if (l.is_a())
        out.push_a(l.exp);
      else
        out.push_base(-l.x);
    }
    return out;
  }
  if (const auto* phi = std::get_if<AutPhiE>(&spec)) {
    for (const auto& l : w.letters()) {
      if (!l.is_a()) {
        out.push_base(l.x);
      } else if (l.exp > 0) {
        out.push_a(1);
        if (!phi->e.is_zero()) out.push_base(phi->e);
      } else {
        if (!phi->e.is_zero()) out.push_base(-phi->e);
        out.push_a(-1);
      }
    }
    return out;
  }
  if (const auto* theta = std::get_if<AutThetaK>(&spec)) {
    if (theta->k == 0 || std::gcd(theta->k, ctx.m()) != 1)
      throw InvalidAutSpec("theta_k needs k != 0 and gcd(k, m) = 1, got k = " + std::to_string(theta->k));
    for (const auto& l : w.letters()) {
      if (l.is_a())
        out.push_a(l.exp);
      else
        out.push_base(l.x * theta->k);
    }
    return out;
  }
  const auto& embed = std::get<AutEmbedD>(spec);
  if (embed.d < 1) throw InvalidAutSpec("embed:d needs d >= 1");
  if (!is_compact_expressible(w)) throw InvalidAutSpec("embed:d acts on words over {a, b} only");
  for (const auto& l : w.letters()) {
    if (l.is_a())
      out.push_a(l.exp);
    else
      out.push_base(l.x * embed.d);
  }
  return out;
}

GroupWord substitute(const GroupWord& w, const GroupWord& image_a, const GroupWord& image_b) {
  const GroupWord inv_a = image_a.inverse(), inv_b = image_b.inverse();
  GroupWord out;
  for (const auto& l : w.letters()) {
    if (l.is_a()) {
      out.append(l.exp > 0 ? image_a : inv_a);
      continue;
    }
    if (l.x.is_zero()) continue;
    if (l.x.entries().size() != 1 || l.x.entries().front().first != 0)
      throw ShapeMismatch("substitution needs a word over {a, b}");
    const mpz_class& k = l.x.entries().front().second;
    for (mpz_class i = 0; i < abs(k); ++i) out.append(k > 0 ? image_b : inv_b);
  }
  return out;
}

HomCheck hom_check(const MarkedGroupSpec& src, const MarkedGroupSpec& dst, const GroupWord& image_a,
                   const GroupWord& image_b, std::size_t depth) {
  if (depth == 0) throw PreconditionViolated("depth must be at least 1");
  const GroupCtx sc(src), dc(dst);
  HomCheck out;
  out.depth = depth;
  GroupWord b = parse_word("b");
  for (std::size_t i = 1; i <= depth; ++i) {
    GroupWord rel = commutator(b, b_word(sc, i));
    if (!is_trivial(dc, substitute(rel, image_a, image_b))) {
      out.pass = false;
      out.first_failure = i;
      return out;
    }
  }
  return out;
}

HomCheck hom_check(const MarkedGroupSpec& src, const WreathElem& image_a, const WreathElem& image_b,
                   std::size_t depth) {
  if (depth == 0) throw PreconditionViolated("depth must be at least 1");
  const GroupCtx sc(src);
  HomCheck out;
  out.depth = depth;
  const WreathElem inv_a = image_a.inverse(), inv_b = image_b.inverse();
  GroupWord b = parse_word("b");
  for (std::size_t i = 1; i <= depth; ++i) {
    WreathElem acc;
    const GroupWord rel = commutator(b, b_word(sc, i));
    for (const auto& l : rel.letters()) {
      if (l.is_a()) {
        acc *= l.exp > 0 ? image_a : inv_a;
        continue;
      }
      const mpz_class& k = l.x.entries().front().second;
      for (mpz_class c = 0; c < abs(k); ++c) acc *= k > 0 ? image_b : inv_b;
    }
    if (!acc.is_identity()) {
      out.pass = false;
      out.first_failure = i;
      return out;
    }
  }
  return out;
}

}  // namespace bsl
