#include <algorithm>
#include <set>

#include "bsl/enumerate.hpp"
#include "bsl/group.hpp"
#include "doctest.h"

using namespace bsl;

namespace {

// Every word over 4 letters of length len, in lexicographic order.
std::vector<Codes> all_words(std::size_t len) {
  std::vector<Codes> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    Codes w(len);
    std::size_t c = code;
    for (std::size_t i = len; i-- > 0;) {
      w[i] = static_cast<std::uint8_t>(c % 4);
      c /= 4;
    }
    out.push_back(w);
  }
  return out;
}

bool naive_reduced(const Codes& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if ((w[i] ^ 1) == w[i + 1]) return false;
  return true;
}

Codes naive_inverse(const Codes& w) {
  Codes out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(static_cast<std::uint8_t>(*it ^ 1));
  return out;
}

// Canonical representative: least rotation of w or of w^-1.
Codes naive_canonical(const Codes& w) {
  Codes best = w;
  for (const Codes& base : {w, naive_inverse(w)}) {
    Codes r = base;
    for (std::size_t k = 0; k < w.size(); ++k) {
      best = std::min(best, r);
      std::rotate(r.begin(), r.begin() + 1, r.end());
    }
  }
  return best;
}

bool naive_candidate(const Codes& w) {
  if (w.empty() || !naive_reduced(w) || (w.back() ^ 1) == w.front()) return false;
  long sa = 0, sb = 0;
  for (auto c : w) (c < 2 ? sa : sb) += (c & 1) ? -1 : 1;
  return sa == 0 && sb == 0 && naive_canonical(w) == w;
}

std::vector<Codes> naive_candidates(std::size_t len) {
  std::vector<Codes> out;
  for (auto& w : all_words(len))
    if (naive_candidate(w)) out.push_back(w);
  return out;
}

// Collects every candidate by rejecting them all.
std::vector<Codes> walked_candidates(std::size_t len, ExecPolicy policy) {
  std::vector<Codes> seen;
  CandidateStats stats;
  auto hit = first_candidate(
      len,
      [&]() -> CodePredicate {
        return [&seen, policy](std::span<const std::uint8_t> w) {
          if (policy == ExecPolicy::Serial) seen.emplace_back(w.begin(), w.end());
          return false;
        };
      },
      policy, &stats);
  CHECK_FALSE(hit);
  if (policy == ExecPolicy::Serial) CHECK(stats.candidates == seen.size());
  return seen;
}

}  // namespace

TEST_CASE("reduced words") {
  CHECK(reduced_words(0).size() == 1);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto words = reduced_words(n);
    std::size_t expect = 4;
    for (std::size_t i = 1; i < n; ++i) expect *= 3;
    CHECK(words.size() == expect);
    CHECK(std::is_sorted(words.begin(), words.end()));
    for (const auto& w : words) CHECK(naive_reduced(w));
  }
  CHECK(reduced_words_up_to(3).size() == 1 + 4 + 12 + 36);
}

TEST_CASE("predicates match the naive definitions") {
  for (std::size_t len = 0; len <= 6; ++len) {
    for (const auto& w : all_words(len)) {
      CHECK(inverse_codes(w) == naive_inverse(w));
      if (!naive_reduced(w)) continue;
      CHECK(is_cyclically_reduced(w) == (w.size() < 2 || (w.back() ^ 1) != w.front()));
      CHECK(is_rotation_canonical(w) == (naive_canonical(w) == w));
    }
  }
  Codes ab{kLa, kLb, kLA, kLB};
  CHECK(has_zero_abelianization(ab));
  CHECK_FALSE(has_zero_abelianization(Codes{kLa, kLb}));
}

TEST_CASE("candidate enumeration agrees with the naive oracle") {
  for (std::size_t len = 1; len <= 10; ++len) {
    auto expect = len <= 8 ? naive_candidates(len) : std::vector<Codes>{};
    auto got = walked_candidates(len, ExecPolicy::Serial);
    CHECK(std::is_sorted(got.begin(), got.end()));
    if (len <= 8) CHECK(got == expect);
    for (const auto& w : got) CHECK(naive_candidate(w));
  }
}

TEST_CASE("cumulative candidate counts") {
  // Independent count from the naive oracle through length 8.
  std::vector<std::uint64_t> cumulative;
  std::uint64_t total = 0;
  for (std::size_t len = 2; len <= 8; len += 2) {
    total += naive_candidates(len).size();
    cumulative.push_back(total);
  }
  CHECK(cumulative == std::vector<std::uint64_t>{0, 1, 3, 17});
  CandidateStats serial, parallel;
  auto never = []() -> CodePredicate { return [](std::span<const std::uint8_t>) { return false; }; };
  for (std::size_t len = 1; len <= 12; ++len) {
    first_candidate(len, never, ExecPolicy::Serial, &serial);
    first_candidate(len, never, ExecPolicy::Parallel, &parallel);
  }
  CHECK(serial.candidates == 598);
  CHECK(parallel.candidates == serial.candidates);
}

TEST_CASE("serial and parallel searches return the same first hit") {
  // Predicates keyed on the word content only, so both policies see the same answer set.
  std::vector<std::function<bool(std::span<const std::uint8_t>)>> preds{
      [](std::span<const std::uint8_t> w) { return w.size() > 3 && w[3] == kLB; },
      [](std::span<const std::uint8_t> w) { return std::count(w.begin(), w.end(), kLb) == 3; },
      [](std::span<const std::uint8_t> w) { return w.back() == kLA && w[w.size() / 2] == kLb; },
  };
  for (const auto& p : preds) {
    for (std::size_t len = 2; len <= 12; len += 2) {
      auto make = [&]() -> CodePredicate { return p; };
      auto s = first_candidate(len, make, ExecPolicy::Serial);
      auto q = first_candidate(len, make, ExecPolicy::Parallel);
      CHECK(s == q);
      if (len <= 8) {
        std::optional<Codes> expect;
        for (const auto& w : naive_candidates(len)) {
          if (p(w)) {
            expect = w;
            break;
          }
        }
        CHECK(s == expect);
      }
    }
  }
}
