#pragma once

// Relator words, distances in the space of marked groups, isomorphism
// classification and black-box recovery of (|m|, r_1, r_2, ...).

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bsl/enumerate.hpp"
#include "bsl/group.hpp"

namespace bsl {

/// b_i (same as b_word).
GroupWord relator_b(const GroupCtx& ctx, std::size_t i);
/// [b, b_i], trivial in every limit group with these digits.
GroupWord relator_bracket(const GroupCtx& ctx, std::size_t i);
/// a^{n+1} (m e_0) a^-1 (-t_1 e_0) a^-1 ... (-t_n e_0) a^-1, spelled over {a, b}.
GroupWord relator_w(long m, std::span<const long> t);
/// w(m, t) b w(-m, -t) b^-1: trivial iff t is the digit prefix.
GroupWord relator_win_e(long m, std::span<const long> t);
/// v_k = [a b^k a^-1, b]: trivial iff m divides k.
GroupWord relator_v(long k);

struct Distinguishing {
  std::size_t length = 0;
  GroupWord word;
};

/// Shortest word trivial in exactly one of the two groups, up to max_len.
std::optional<Distinguishing> shortest_distinguishing(const MarkedGroupSpec& g1, const MarkedGroupSpec& g2,
                                                      std::size_t max_len,
                                                      ExecPolicy policy = ExecPolicy::Parallel,
                                                      CandidateStats* stats = nullptr);

struct DistanceBounds {
  std::size_t h = 0;
  long lower_exp = 0;  // d >= e^-lower_exp
  long upper_exp = 0;  // d <= e^-upper_exp
};

/// Digits compared before declaring two digit-stream parameters equal.
inline constexpr std::size_t kDigitCompareBudget = 4096;

DistanceBounds distance_bounds(const MarkedGroupSpec& g1, const MarkedGroupSpec& g2);

bool isomorphic(const MarkedGroupSpec& g1, const MarkedGroupSpec& g2);

using WordOracle = std::function<bool(const GroupWord&)>;

/// Oracle answering the word problem of the given limit group.
WordOracle limit_oracle(const MarkedGroupSpec& spec);

struct RecoveredParameters {
  long m_abs = 0;
  std::vector<long> digits;
};

/// Searches v_k for k up to max_m when looking for |m|.
RecoveredParameters recover_parameters(const WordOracle& oracle, std::size_t n, long max_m = 4096);

}  // namespace bsl
