#pragma once

// The quotient onto Z wr Z, the automorphisms J and phi_e, the endomorphisms
// theta_k and b -> b^d, and a truncated relator-based homomorphism check.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "bsl/group.hpp"
#include "bsl/poly.hpp"

namespace bsl {

/// (P, s) in Z[X, X^-1] x| Z with (P, s)(Q, t) = (P + X^s Q, s + t).
struct WreathElem {
  LaurentPoly poly;
  long shift = 0;

  static WreathElem gen_a() { return {LaurentPoly{}, 1}; }
  static WreathElem gen_b() { return {LaurentPoly(0, {mpz_class(1)}), 0}; }
  bool is_identity() const { return poly.is_zero() && shift == 0; }
  WreathElem inverse() const;
  WreathElem& operator*=(const WreathElem& other);
  friend WreathElem operator*(WreathElem x, const WreathElem& y) { return x *= y; }
  friend bool operator==(const WreathElem&, const WreathElem&) = default;

  std::string to_string() const;
};

nlohmann::json wreath_to_json(const WreathElem& x);
WreathElem wreath_from_json(const nlohmann::json& j);

WreathElem wreath_image(const GroupCtx& ctx, const GroupWord& w);

struct AutJ {};
struct AutPhiE {
  EVec e;
};
struct AutThetaK {
  long k;
};
struct AutEmbedD {
  long d;
};
using AutSpec = std::variant<AutJ, AutPhiE, AutThetaK, AutEmbedD>;

/// `J`, `phi:<evec>`, `theta:<k>` or `embed:<d>`.
AutSpec parse_aut(std::string_view text);
std::string format_aut(const AutSpec& spec);

GroupWord apply_automorphism(const GroupCtx& ctx, const AutSpec& spec, const GroupWord& w);

/// Replace a by image_a and b by image_b in a word over {a, b}.
GroupWord substitute(const GroupWord& w, const GroupWord& image_a, const GroupWord& image_b);

struct HomCheck {
  bool pass = true;
  std::optional<std::size_t> first_failure;  // index i of the failing relator [b, b_i]
  std::size_t depth = 0;
};

/// Tests the relators [b, b_i], i = 1..depth, of src on the images. Truncated:
/// a pass only says that the first `depth` relators survive.
HomCheck hom_check(const MarkedGroupSpec& src, const MarkedGroupSpec& dst, const GroupWord& image_a,
                   const GroupWord& image_b, std::size_t depth);
HomCheck hom_check(const MarkedGroupSpec& src, const WreathElem& image_a, const WreathElem& image_b,
                   std::size_t depth);

}  // namespace bsl
