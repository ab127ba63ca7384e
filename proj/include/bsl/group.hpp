#pragma once

// Words in BS-bar(m, xi) and the HNN decision procedures: Britton reduction,
// normal forms, cyclic reduction and conjugacy.
//
// The group is the HNN extension of E with stable letter a, associated
// subgroups H = E_{m,xi}, K = E_1 and a h a^-1 = up(h).  The generator b is e_0.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bsl/lattice.hpp"

namespace bsl {

struct Letter {
  enum class Kind : std::uint8_t { A, Base };

  Kind kind = Kind::A;
  int exp = 1;  // +1 or -1 for A letters
  EVec x;       // payload for Base letters

  static Letter a(int e = 1) { return Letter{Kind::A, e, {}}; }
  static Letter base(EVec v) { return Letter{Kind::Base, 0, std::move(v)}; }
  bool is_a() const { return kind == Kind::A; }
  Letter inverse() const;
};

enum class WordMode { Compact, Extended };

/// Sequence of letters.  Equality compares the token expansion (every Base
/// letter split into its sorted e_i^k terms), which is what the text forms see.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  GroupWord& push_a(int e) {
    letters_.push_back(Letter::a(e));
    return *this;
  }
  GroupWord& push_base(EVec x) {
    letters_.push_back(Letter::base(std::move(x)));
    return *this;
  }
  GroupWord& append(const GroupWord& other);
  GroupWord inverse() const;

  friend GroupWord operator*(GroupWord u, const GroupWord& v) { return u.append(v); }
  friend bool operator==(const GroupWord& u, const GroupWord& v);

 private:
  std::vector<Letter> letters_;
};

GroupWord parse_word(std::string_view text, WordMode mode = WordMode::Compact);
/// Compact mode needs every Base letter to be a multiple of e_0.
std::string format_word(const GroupWord& w, WordMode mode = WordMode::Extended);
bool is_compact_expressible(const GroupWord& w);

/// Compact letter codes used by the enumerators: a, A, b, B.
enum : std::uint8_t { kLa = 0, kLA = 1, kLb = 2, kLB = 3 };
GroupWord word_from_codes(std::span<const std::uint8_t> codes);
std::string codes_to_string(std::span<const std::uint8_t> codes);

/// x_0 a^{d_1} x_1 ... a^{d_l} x_l.
struct ReducedForm {
  std::vector<EVec> segments{EVec{}};
  std::vector<int> deltas;

  std::size_t t_length() const { return deltas.size(); }
  long sigma() const;
  bool is_identity() const { return deltas.empty() && segments.front().is_zero(); }
  GroupWord to_word() const;
  std::string to_string() const { return format_word(to_word(), WordMode::Extended); }

  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

/// A ReducedForm whose segments after a (resp. a^-1) lie in {j e_0 : 0 <= j < |m|}
/// (resp. Z e_0).  Unique per group element.
struct NormalForm {
  ReducedForm form;
  std::string to_string() const { return form.to_string(); }
  /// Compact byte key, suitable for hashing.
  std::string key() const;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Incremental Britton reduction.  Letters are appended on the right; the
/// stack never holds a pinch.
class Reducer {
 public:
  explicit Reducer(const GroupCtx& ctx) : ctx_(&ctx) {}

  void push_a(int delta);
  void push_base(const EVec& x);
  void push_e0(long k);
  void push(const Letter& l);
  void push(const GroupWord& w);
  void push_codes(std::span<const std::uint8_t> codes);

  std::size_t t_length() const { return deltas_.size(); }
  bool is_identity() const { return deltas_.empty() && segments_.front().is_zero(); }
  ReducedForm form() const { return ReducedForm{segments_, deltas_}; }
  void clear();

 private:
  const GroupCtx* ctx_;
  std::vector<EVec> segments_{EVec{}};
  std::vector<int> deltas_;
};

ReducedForm britton_reduce(const GroupCtx& ctx, const GroupWord& w);
bool is_trivial(const GroupCtx& ctx, const GroupWord& w);
bool is_trivial_codes(const GroupCtx& ctx, std::span<const std::uint8_t> codes);

NormalForm normal_form(const GroupCtx& ctx, const GroupWord& w);
NormalForm normalize(const GroupCtx& ctx, ReducedForm r);

struct CyclicReduction {
  ReducedForm core;
  GroupWord conjugator;  // conjugator^-1 * w * conjugator = core
};

CyclicReduction cyclic_reduce(const GroupCtx& ctx, const GroupWord& w);

/// e with e v (-e) = u, for cyclically reduced u, v sharing a delta sequence.
std::optional<EVec> base_conjugacy_solve(const GroupCtx& ctx, const ReducedForm& u, const ReducedForm& v);

/// g with g w g^-1 = v.
std::optional<GroupWord> are_conjugate(const GroupCtx& ctx, const GroupWord& v, const GroupWord& w);

struct SigmaTLength {
  long sigma = 0;
  std::size_t tlen = 0;
};
SigmaTLength sigma_and_tlength(const GroupCtx& ctx, const GroupWord& w);

/// Word for e_i over {a, b}: b_0 = b, b_1 = a b^m a^-1, b_i = a b_{i-1} b^{-r_{i-1}} a^-1.
GroupWord b_word(const GroupCtx& ctx, std::size_t i);
/// Rewrite every Base letter through the b_i words.
GroupWord to_compact(const GroupCtx& ctx, const GroupWord& w);

/// [x, y] = x y x^-1 y^-1.
GroupWord commutator(const GroupWord& x, const GroupWord& y);

}  // namespace bsl
