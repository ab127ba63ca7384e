#include "bsl/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>

namespace bsl {

namespace {

void extend_reduced(Codes& cur, std::size_t len, std::vector<Codes>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (std::uint8_t c = 0; c < 4; ++c) {
    if (!cur.empty() && (cur.back() ^ 1) == c) continue;
    cur.push_back(c);
    extend_reduced(cur, len, out);
    cur.pop_back();
  }
}

// Depth-first walk over candidate words extending `cur` to length `len`.
// Returns true (and leaves the hit in `cur`) as soon as `visit` accepts a leaf.
class CandidateWalker {
 public:
  CandidateWalker(std::size_t len, const CodePredicate& pred, std::uint64_t& count)
      : len_(len), pred_(pred), count_(count) {}

  bool run(Codes& cur) {
    long sa = 0, sb = 0;
    for (auto c : cur) bump(c, sa, sb, 1);
    // Necklace period of the prefix (Fredricksen-Kessler-Maiorana).
    std::size_t p = 1;
    for (std::size_t i = 1; i < cur.size(); ++i) {
      if (cur[i] < cur[i - p]) return false;
      if (cur[i] > cur[i - p]) p = i + 1;
    }
    return walk(cur, sa, sb, p);
  }

 private:
  static void bump(std::uint8_t c, long& sa, long& sb, int dir) {
    long step = (c & 1) ? -dir : dir;
    (c < 2 ? sa : sb) += step;
  }

  // A canonical word is a necklace, so every prefix must be a pre-necklace:
  // with period p, the next letter may not undercut cur[i - p].
  bool walk(Codes& cur, long sa, long sb, std::size_t p) {
    const std::size_t rem = len_ - cur.size();
    if (static_cast<std::size_t>(std::labs(sa) + std::labs(sb)) > rem) return false;
    if (rem == 0) {
      if (len_ % p != 0) return false;
      if (!is_cyclically_reduced(cur) || !is_rotation_canonical(cur)) return false;
      ++count_;
      return pred_(cur);
    }
    const std::size_t i = cur.size();
    for (std::uint8_t c = cur[i - p]; c < 4; ++c) {
      if ((cur.back() ^ 1) == c) continue;
      long na = sa, nb = sb;
      bump(c, na, nb, 1);
      cur.push_back(c);
      if (walk(cur, na, nb, c == cur[i - p] ? p : i + 1)) return true;
      cur.pop_back();
    }
    return false;
  }

  std::size_t len_;
  const CodePredicate& pred_;
  std::uint64_t& count_;
};

}  // namespace

std::vector<Codes> reduced_words(std::size_t len) {
  std::vector<Codes> out;
  Codes cur;
  extend_reduced(cur, len, out);
  return out;
}

std::vector<Codes> reduced_words_up_to(std::size_t max_len) {
  std::vector<Codes> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    auto part = reduced_words(len);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

bool is_cyclically_reduced(std::span<const std::uint8_t> w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if ((w[i] ^ 1) == w[i + 1]) return false;
  return n < 2 || (w[n - 1] ^ 1) != w[0];
}

Codes inverse_codes(std::span<const std::uint8_t> w) {
  Codes out(w.rbegin(), w.rend());
  for (auto& c : out) c ^= 1;
  return out;
}

bool is_rotation_canonical(std::span<const std::uint8_t> w) {
  const std::size_t n = w.size();
  if (n == 0) return true;
  // Compare w against rotation k of `other` without materializing it.
  auto not_smaller = [&](std::span<const std::uint8_t> other, std::size_t k) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint8_t o = other[(k + i) % n];
      if (w[i] != o) return w[i] < o;
    }
    return true;
  };
  for (std::size_t k = 1; k < n; ++k)
    if (!not_smaller(w, k)) return false;
  Codes inv = inverse_codes(w);
  for (std::size_t k = 0; k < n; ++k)
    if (!not_smaller(inv, k)) return false;
  return true;
}

bool has_zero_abelianization(std::span<const std::uint8_t> w) {
  long sa = 0, sb = 0;
  for (auto c : w) ((c < 2) ? sa : sb) += (c & 1) ? -1 : 1;
  return sa == 0 && sb == 0;
}

std::optional<Codes> first_candidate(std::size_t len, const std::function<CodePredicate()>& make_pred,
                                     ExecPolicy policy, CandidateStats* stats) {
  // A nonempty candidate has zero a-sum, so it contains both a and A; the
  // canonical representative therefore starts with the least code, a.
  if (len == 0 || len % 2 != 0) return std::nullopt;

  if (policy == ExecPolicy::Serial) {
    CodePredicate pred = make_pred();
    std::uint64_t count = 0;
    Codes cur{0};
    bool hit = CandidateWalker(len, pred, count).run(cur);
    if (stats) stats->candidates += count;
    if (hit) return cur;
    return std::nullopt;
  }

  // Partition by prefix; prefixes are generated in lexicographic order, so the
  // smallest successful prefix index holds the answer.
  const std::size_t plen = std::min<std::size_t>(len, 5);
  std::vector<Codes> prefixes;
  for (auto& p : reduced_words(plen - 1)) {
    Codes q{0};
    if (!p.empty() && p.front() == 1) continue;  // a A would cancel
    q.insert(q.end(), p.begin(), p.end());
    prefixes.push_back(std::move(q));
  }
  const long np = static_cast<long>(prefixes.size());
  std::vector<std::optional<Codes>> found(prefixes.size());
  std::atomic<long> best{std::numeric_limits<long>::max()};
  std::atomic<std::uint64_t> total{0};

#pragma omp parallel
  {
    CodePredicate pred = make_pred();
    std::uint64_t count = 0;
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < np; ++i) {
      if (i > best.load(std::memory_order_relaxed)) continue;
      Codes cur = prefixes[static_cast<std::size_t>(i)];
      if (CandidateWalker(len, pred, count).run(cur)) {
        found[static_cast<std::size_t>(i)] = std::move(cur);
        long prev = best.load();
        while (i < prev && !best.compare_exchange_weak(prev, i)) {
        }
      }
    }
    total += count;
  }
  if (stats) stats->candidates += total.load();
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

}  // namespace bsl
