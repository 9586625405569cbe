#pragma once

// Integer sequences with order-preserving symbol compression, matching
// pairs, and the two partial orders the rest of the library is stated in.
// All sequence indices are 1-based; index 0 is reserved for the sentinel
// pair (0,0).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lcis {

// A sequence over dense symbol ids 1..m, m <= |A|+|B|. Ids are shared
// between the two sequences produced by one compress() call: equal raw
// values get equal ids, and id order follows raw value order.
struct sequence {
  std::vector<std::uint32_t> elems;
  std::optional<std::vector<std::int64_t>> original;

  std::size_t size() const { return elems.size(); }
  bool empty() const { return elems.empty(); }

  // 1-based accessor, matching the A[1..n] convention used throughout.
  std::uint32_t symbol(std::size_t i) const { return elems[i - 1]; }

  std::uint32_t max_symbol() const {
    return elems.empty() ? 0 : *std::max_element(elems.begin(), elems.end());
  }

  friend bool operator==(const sequence& a, const sequence& b) {
    return a.elems == b.elems;
  }
};

// Index pair (x,y) with A[x] = B[y] = symbol.
struct matching_pair {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  std::uint32_t symbol = 0;

  friend bool operator==(const matching_pair&, const matching_pair&) = default;
};

// (x,y) <= (x',y')  iff  x <= x' and y <= y'.
inline bool pair_leq(const matching_pair& p, const matching_pair& q) {
  return p.x <= q.x && p.y <= q.y;
}

// (x,y) < (x',y') in the chain order: both coordinates and the symbol
// strictly increase.
inline bool pair_prec(const matching_pair& p, const matching_pair& q) {
  return p.x < q.x && p.y < q.y && p.symbol < q.symbol;
}

// Renames the raw values of both inputs to ids 1..m by sorted rank over
// the union of their distinct values. Order-isomorphic to the inputs, so
// any order-based computation is unaffected. Raw values are kept in
// sequence::original.
inline std::pair<sequence, sequence> compress(std::span<const std::int64_t> a,
                                              std::span<const std::int64_t> b) {
  std::vector<std::int64_t> values;
  values.reserve(a.size() + b.size());
  values.insert(values.end(), a.begin(), a.end());
  values.insert(values.end(), b.begin(), b.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  auto rank = [&](std::int64_t v) {
    auto it = std::lower_bound(values.begin(), values.end(), v);
    return static_cast<std::uint32_t>(it - values.begin()) + 1;
  };

  sequence sa, sb;
  sa.elems.reserve(a.size());
  sb.elems.reserve(b.size());
  for (std::int64_t v : a) sa.elems.push_back(rank(v));
  for (std::int64_t v : b) sb.elems.push_back(rank(v));
  sa.original = std::vector<std::int64_t>(a.begin(), a.end());
  sb.original = std::vector<std::int64_t>(b.begin(), b.end());
  return {std::move(sa), std::move(sb)};
}

inline std::pair<sequence, sequence> compress(const std::vector<std::int64_t>& a,
                                              const std::vector<std::int64_t>& b) {
  return compress(std::span<const std::int64_t>(a), std::span<const std::int64_t>(b));
}

// Raw value for each symbol id (index 0 = id 1). Requires the sequences
// to carry their originals, i.e. to come from compress().
inline std::vector<std::int64_t> symbol_values(const sequence& a, const sequence& b) {
  std::uint32_t m = std::max(a.max_symbol(), b.max_symbol());
  std::vector<std::int64_t> out(m);
  for (std::size_t i = 0; i < a.size(); ++i) out[a.elems[i] - 1] = (*a.original)[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[b.elems[i] - 1] = (*b.original)[i];
  return out;
}

// Positions of every symbol: result[s] = ascending 1-based positions i
// with seq[i] = s. Index 0 is unused.
inline std::vector<std::vector<std::uint32_t>> occurrence_lists(const sequence& s,
                                                                std::uint32_t num_symbols) {
  std::vector<std::vector<std::uint32_t>> occ(num_symbols + 1);
  for (std::size_t i = 0; i < s.size(); ++i)
    occ[s.elems[i]].push_back(static_cast<std::uint32_t>(i + 1));
  return occ;
}

// Visits every matching pair grouped by symbol ascending, then x, then y.
template <class Fn>
void for_each_matching_pair(const sequence& a, const sequence& b, Fn&& fn) {
  std::uint32_t m = std::max(a.max_symbol(), b.max_symbol());
  auto xa = occurrence_lists(a, m);
  auto yb = occurrence_lists(b, m);
  for (std::uint32_t sym = 1; sym <= m; ++sym) {
    if (xa[sym].empty() || yb[sym].empty()) continue;
    for (std::uint32_t x : xa[sym])
      for (std::uint32_t y : yb[sym]) fn(matching_pair{x, y, sym});
  }
}

inline std::vector<matching_pair> matching_pairs(const sequence& a, const sequence& b) {
  std::vector<matching_pair> out;
  for_each_matching_pair(a, b, [&](const matching_pair& p) { out.push_back(p); });
  return out;
}

// sum over symbols of |A_sym| * |B_sym|, without materializing the pairs.
inline std::uint64_t matching_pair_count(const sequence& a, const sequence& b) {
  std::uint32_t m = std::max(a.max_symbol(), b.max_symbol());
  std::vector<std::uint64_t> ca(m + 1, 0), cb(m + 1, 0);
  for (std::uint32_t s : a.elems) ++ca[s];
  for (std::uint32_t s : b.elems) ++cb[s];
  std::uint64_t total = 0;
  for (std::uint32_t s = 1; s <= m; ++s) total += ca[s] * cb[s];
  return total;
}

}  // namespace lcis
