#pragma once

// Ground-truth machinery: the quadratic reference DP over prefixes, an
// exponential brute-force check, the chain-end table with its canonical
// predecessor function, and the significant-pair enumerator.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lcis/core.hpp"

namespace lcis {

namespace oracle_detail {

// Row sweep computing, for every matching pair (x,y), the length of the
// longest common increasing subsequence forced to end at (x,y). Pairs are
// emitted in x ascending, then y ascending order. g[y] carries the best
// chain length ending at column y over all rows seen so far.
template <class Emit>
void sweep_chain_ends(const sequence& a, const sequence& b, Emit&& emit) {
  const std::size_t bn = b.size();
  std::vector<std::uint32_t> g(bn + 1, 0);
  for (std::uint32_t x = 1; x <= a.size(); ++x) {
    const std::uint32_t sym = a.symbol(x);
    std::uint32_t best = 0;
    for (std::uint32_t y = 1; y <= bn; ++y) {
      const std::uint32_t bs = b.symbol(y);
      if (bs < sym) {
        best = std::max(best, g[y]);
      } else if (bs == sym) {
        const std::uint32_t level = best + 1;
        emit(x, y, sym, level);
        if (level > g[y]) g[y] = level;
      }
    }
  }
}

// Prefix-max staircase over (y, level): entries ascend in both fields, so
// the largest level among points with y' <= y is one binary search away.
struct level_frontier {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pts;

  std::uint32_t query(std::uint32_t y) const {
    auto it = std::upper_bound(
        pts.begin(), pts.end(), y,
        [](std::uint32_t v, const std::pair<std::uint32_t, std::uint32_t>& p) {
          return v < p.first;
        });
    return it == pts.begin() ? 0 : (it - 1)->second;
  }

  // call only when level > query(y)
  void insert(std::uint32_t y, std::uint32_t level) {
    auto it = std::lower_bound(
        pts.begin(), pts.end(), y,
        [](const std::pair<std::uint32_t, std::uint32_t>& p, std::uint32_t v) {
          return p.first < v;
        });
    auto last = it;
    while (last != pts.end() && last->second <= level) ++last;
    if (it != last) {
      *it = {y, level};
      pts.erase(it + 1, last);
    } else {
      pts.insert(it, {y, level});
    }
  }
};

inline std::uint64_t pair_key(std::uint32_t x, std::uint32_t y) {
  return (std::uint64_t(x) << 32) | y;
}

}  // namespace oracle_detail

// Dense prefix table plus the sparse chain-end values. lcis_at(x,y) is the
// LCIS length of A[1..x] and B[1..y]; the map holds lcisto(x,y) for
// matching pairs only.
struct lcis_table {
  std::size_t a_len = 0;
  std::size_t b_len = 0;
  std::vector<std::int32_t> matrix;  // (a_len+1) x (b_len+1), row-major
  std::unordered_map<std::uint64_t, std::uint32_t> lcisto;
  std::vector<matching_pair> pairs_by_yx;  // all matching pairs, (y,x) ascending

  std::int32_t lcis_at(std::size_t x, std::size_t y) const {
    return matrix[x * (b_len + 1) + y];
  }

  std::optional<std::uint32_t> lcisto_at(std::uint32_t x, std::uint32_t y) const {
    auto it = lcisto.find(oracle_detail::pair_key(x, y));
    if (it == lcisto.end()) return std::nullopt;
    return it->second;
  }

  std::int32_t final_length() const { return lcis_at(a_len, b_len); }
};

inline lcis_table lcis_dp(const sequence& a, const sequence& b) {
  lcis_table t;
  t.a_len = a.size();
  t.b_len = b.size();
  t.lcisto.reserve(64);
  oracle_detail::sweep_chain_ends(a, b,
                                  [&](std::uint32_t x, std::uint32_t y, std::uint32_t /*sym*/,
                                      std::uint32_t level) {
                                    t.lcisto.emplace(oracle_detail::pair_key(x, y), level);
                                  });
  const std::size_t w = t.b_len + 1;
  t.matrix.assign((t.a_len + 1) * w, 0);
  for (std::size_t x = 1; x <= t.a_len; ++x) {
    for (std::size_t y = 1; y <= t.b_len; ++y) {
      std::int32_t v = std::max(t.matrix[(x - 1) * w + y], t.matrix[x * w + y - 1]);
      if (a.symbol(x) == b.symbol(y)) {
        auto it = t.lcisto.find(oracle_detail::pair_key(std::uint32_t(x), std::uint32_t(y)));
        v = std::max(v, std::int32_t(it->second));
      }
      t.matrix[x * w + y] = v;
    }
  }
  t.pairs_by_yx = matching_pairs(a, b);
  std::sort(t.pairs_by_yx.begin(), t.pairs_by_yx.end(),
            [](const matching_pair& p, const matching_pair& q) {
              return p.y != q.y ? p.y < q.y : p.x < q.x;
            });
  return t;
}

// Same recurrence, length only, O(|B|) memory. Suitable for instances far
// too large for the dense matrix.
inline std::uint64_t lcis_dp_length(const sequence& a, const sequence& b) {
  std::uint32_t best = 0;
  oracle_detail::sweep_chain_ends(
      a, b,
      [&](std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t level) {
        best = std::max(best, level);
      });
  return best;
}

// Exhaustive check: enumerates strictly increasing subsequences of A by
// depth-first search and keeps the longest that embeds greedily into B.
// Deliberately avoids the DP recurrence.
inline std::uint64_t lcis_bruteforce(const sequence& a, const sequence& b) {
  constexpr std::size_t kCap = 14;
  if (a.size() > kCap || b.size() > kCap)
    throw std::invalid_argument("lcis_bruteforce: sequence longer than 14");

  std::uint64_t best = 0;
  // pos = leftmost position in B after which the current chain is embedded
  auto rec = [&](auto&& self, std::size_t ai, std::uint32_t last_sym, std::size_t bpos,
                 std::uint64_t len) -> void {
    best = std::max(best, len);
    for (std::size_t j = ai + 1; j <= a.size(); ++j) {
      std::uint32_t s = a.symbol(j);
      if (len > 0 && s <= last_sym) continue;
      std::size_t p = bpos + 1;
      while (p <= b.size() && b.symbol(p) != s) ++p;
      if (p > b.size()) continue;
      self(self, j, s, p, len + 1);
    }
  };
  rec(rec, 0, 0, 0, 0);
  return best;
}

// Canonical previous pair of an optimal chain ending at p: the pair
// preceding p with lcisto one less, tie-broken by minimal y then minimal
// x. Returns nothing iff lcisto(p) = 1.
inline std::optional<matching_pair> predecessor(const matching_pair& p, const lcis_table& t) {
  auto lv = t.lcisto_at(p.x, p.y);
  if (!lv) throw std::invalid_argument("predecessor: not a matching pair of this table");
  if (*lv == 1) return std::nullopt;
  for (const matching_pair& q : t.pairs_by_yx) {
    if (q.y >= p.y) break;  // (y,x) ascending: no later candidate can precede p
    if (pair_prec(q, p) && *t.lcisto_at(q.x, q.y) == *lv - 1) return q;
  }
  throw std::logic_error("predecessor: missing for a pair with lcisto >= 2");
}

inline matching_pair kth_predecessor(const matching_pair& p, std::uint32_t k,
                                     const lcis_table& t) {
  auto lv = t.lcisto_at(p.x, p.y);
  if (!lv) throw std::invalid_argument("kth_predecessor: not a matching pair of this table");
  if (*lv <= k) throw std::invalid_argument("kth_predecessor: depth exceeds lcisto");
  matching_pair cur = p;
  for (std::uint32_t i = 0; i < k; ++i) cur = *predecessor(cur, t);
  return cur;
}

// A chain of matching pairs realizing the final table value, built by
// walking predecessors back from the canonical last pair (minimal y, then
// x). Empty when the sequences share no increasing subsequence.
inline std::vector<matching_pair> witness_chain(const lcis_table& t) {
  std::int32_t len = t.final_length();
  if (len == 0) return {};
  const matching_pair* last = nullptr;
  for (const matching_pair& q : t.pairs_by_yx) {
    if (std::int32_t(*t.lcisto_at(q.x, q.y)) == len) {
      last = &q;
      break;
    }
  }
  std::vector<matching_pair> chain;
  matching_pair cur = *last;
  chain.push_back(cur);
  while (auto prev = predecessor(cur, t)) {
    cur = *prev;
    chain.push_back(cur);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

struct significant_pair {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  std::uint32_t lcisto = 0;

  friend bool operator==(const significant_pair&, const significant_pair&) = default;
};

// Per-symbol lists of the pairs not dominated (under <=) by a distinct
// same-symbol pair with an equal-or-larger chain-end value. Lists are
// sorted by x, then y.
struct significant_pair_set {
  std::vector<std::vector<significant_pair>> by_symbol;  // index = symbol id, [0] unused
  std::uint64_t total = 0;

  const std::vector<significant_pair>& of(std::uint32_t symbol) const {
    return by_symbol[symbol];
  }
};

// Streams every matching pair with its chain-end value and significance
// flag, in x-ascending order, using per-symbol dominance frontiers.
// Memory stays proportional to the frontiers, not the pair count.
template <class Sink>
void scan_pairs(const sequence& a, const sequence& b, Sink&& sink) {
  std::uint32_t m = std::max(a.max_symbol(), b.max_symbol());
  std::vector<oracle_detail::level_frontier> frontier(m + 1);
  oracle_detail::sweep_chain_ends(
      a, b,
      [&](std::uint32_t x, std::uint32_t y, std::uint32_t sym, std::uint32_t level) {
        auto& f = frontier[sym];
        bool significant = f.query(y) < level;
        if (significant) f.insert(y, level);
        sink(x, y, sym, level, significant);
      });
}

inline significant_pair_set significant_pairs(const sequence& a, const sequence& b) {
  significant_pair_set out;
  out.by_symbol.resize(std::max(a.max_symbol(), b.max_symbol()) + 1);
  scan_pairs(a, b,
             [&](std::uint32_t x, std::uint32_t y, std::uint32_t sym, std::uint32_t level,
                 bool significant) {
               if (!significant) return;
               out.by_symbol[sym].push_back({x, y, level});
               ++out.total;
             });
  return out;
}

struct significant_count_result {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> per_symbol;  // index = symbol id, [0] unused
};

inline significant_count_result significant_count(const sequence& a, const sequence& b) {
  significant_count_result out;
  out.per_symbol.assign(std::max(a.max_symbol(), b.max_symbol()) + 1, 0);
  scan_pairs(a, b,
             [&](std::uint32_t, std::uint32_t, std::uint32_t sym, std::uint32_t, bool sig) {
               if (!sig) return;
               ++out.per_symbol[sym];
               ++out.total;
             });
  return out;
}

// 144 n^2 / (log2 n)^(1/3): a loose but never-violated ceiling on the
// significant-pair count, n >= 2.
inline double significant_count_ceiling(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("significant_count_ceiling: n must be >= 2");
  double dn = static_cast<double>(n);
  return 144.0 * dn * dn / std::cbrt(std::log2(dn));
}

}  // namespace lcis
