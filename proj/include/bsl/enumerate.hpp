#pragma once

// Word enumeration over the compact alphabet a, A, b, B (codes 0..3, inverse = code ^ 1).
//
// The searches come in two flavours with identical results: a serial reference
// and an OpenMP kernel that partitions the search tree by prefix and keeps the
// lexicographically first hit, so the answer never depends on scheduling.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace bsl {

using Codes = std::vector<std::uint8_t>;
using CodePredicate = std::function<bool(std::span<const std::uint8_t>)>;

enum class ExecPolicy { Serial, Parallel };

/// All freely reduced words of length exactly `len`, in lexicographic order.
std::vector<Codes> reduced_words(std::size_t len);
/// All freely reduced words of length 0..max_len, in length-lex order.
std::vector<Codes> reduced_words_up_to(std::size_t max_len);

bool is_cyclically_reduced(std::span<const std::uint8_t> w);
/// w is lexicographically minimal among its cyclic rotations and those of w^-1.
bool is_rotation_canonical(std::span<const std::uint8_t> w);
/// a-exponent sum and b-exponent sum both vanish.
bool has_zero_abelianization(std::span<const std::uint8_t> w);
Codes inverse_codes(std::span<const std::uint8_t> w);

/// Candidates for a shortest word distinguishing two limit groups: freely and
/// cyclically reduced, null in the abelianization, canonical up to rotation and
/// inversion.
struct CandidateStats {
  std::uint64_t candidates = 0;
};

/// First candidate of length `len` (lexicographic order) satisfying `pred`.
/// The parallel policy calls `make_pred` once per worker so each worker can own its state.
std::optional<Codes> first_candidate(std::size_t len, const std::function<CodePredicate()>& make_pred,
                                     ExecPolicy policy, CandidateStats* stats = nullptr);

}  // namespace bsl
