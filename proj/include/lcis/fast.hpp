#pragma once

// The sub-quadratic LCIS algorithm. Symbols are processed in increasing
// order; per level k, a successor map Q_k keeps the known chain ends with
// value k as a staircase (x strictly ascending, y strictly descending).
// Infrequent symbols enumerate their matching pairs directly, resolving
// each pair's level with a galloping search over the levels; frequent
// symbols instead extend every stored pair by one occurrence. New pairs
// are batched per symbol and flushed through the dominance-preserving
// insert.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "lcis/core.hpp"
#include "lcis/oracle.hpp"
#include "lcis/veb.hpp"

namespace lcis {

// Density parameter t with log t = Theta(log log n): max(4, cbrt(log2 n)).
inline std::uint64_t choose_t_from_log2(double log2_n) {
  if (log2_n < 0) throw std::invalid_argument("choose_t_from_log2: negative width");
  auto r = static_cast<std::uint64_t>(std::cbrt(log2_n));
  while (static_cast<double>((r + 1) * (r + 1) * (r + 1)) <= log2_n) ++r;
  while (r > 0 && static_cast<double>(r * r * r) > log2_n) --r;
  return std::max<std::uint64_t>(4, r);
}

inline std::uint64_t choose_t(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("choose_t: n must be positive");
  return choose_t_from_log2(std::log2(static_cast<double>(n)));
}

struct fast_stats {
  std::uint64_t probe_count = 0;       // level probes made by compute_next_pair
  std::uint64_t queue_ops = 0;         // successor-map operations on the level queues
  std::uint64_t pending_pairs = 0;     // total size of the per-symbol batches
  std::uint64_t frequent_symbols = 0;
  std::uint64_t infrequent_symbols = 0;
};

inline bool debug_checks_from_env() {
  const char* v = std::getenv("LCIS_DEBUG_ASSERT");
  return v != nullptr && std::string(v) == "1";
}

// The family Q_0..Q_n of per-level staircases. Level 0 is the permanent
// sentinel pair (0,0); levels above the largest inserted one stay empty.
class queue_family {
 public:
  explicit queue_family(std::uint64_t x_universe, unsigned veb_c = 2, bool debug_checks = false)
      : x_universe_(x_universe), veb_c_(veb_c), debug_(debug_checks) {}

  std::uint64_t x_universe() const { return x_universe_; }
  std::uint32_t max_nonempty() const { return max_nonempty_; }
  bool debug_checks() const { return debug_; }
  fast_stats& stats() const { return stats_; }

  // nullptr means the level was never touched (empty)
  const veb_map<std::uint64_t>* level(std::uint64_t k) const {
    if (k == 0 || k >= levels_.size()) return nullptr;
    return levels_[k].get();
  }

  // Pair in Q_k with the largest x-coordinate strictly below x, seen
  // through the staircase: among stored pairs with smaller x it has the
  // smallest y. Level 0 yields the sentinel.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> prev_pair(std::uint64_t k,
                                                                   std::uint32_t x) const {
    if (k == 0) return std::make_pair(0u, 0u);
    const auto* q = level(k);
    if (!q) return std::nullopt;
    ++stats_.queue_ops;
    auto e = q->prev(x);
    if (!e) return std::nullopt;
    return std::make_pair(std::uint32_t(e->key), std::uint32_t(e->value));
  }

  // Dominance-preserving insert: drops the new pair when an existing one
  // dominates it, otherwise inserts it and evicts every stored pair it
  // dominates. Keeps each level a staircase.
  void insert_inv(std::uint32_t k, std::uint32_t x, std::uint32_t y) {
    if (k < 1 || x < 1 || y < 1) throw std::invalid_argument("insert_inv: level and pair are 1-based");
    auto& q = ensure_level(k);
    // one probe finds both a same-x entry and the nearest smaller x
    ++stats_.queue_ops;
    auto e = q.prev(std::uint64_t(x) + 1);
    if (e && e->key == x) {
      if (e->value <= y) return;
      ++stats_.queue_ops;
      q.erase(x);  // same x, larger y: replaced below unless dominated
      ++stats_.queue_ops;
      e = q.prev(x);
    }
    if (e && e->value <= y) return;  // (a,b) <= (x,y)
    ++stats_.queue_ops;
    q.insert(x, y);
    for (;;) {
      ++stats_.queue_ops;
      auto s = q.next(x);
      if (!s || s->value < y) break;
      ++stats_.queue_ops;
      q.erase(s->key);
    }
    if (k > max_nonempty_) max_nonempty_ = k;
    if (debug_) assert_staircase_around(q, x, y);
  }

  // (x, y, level) for every stored pair, level-major, x ascending
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> snapshot() const {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t k = 1; k < levels_.size(); ++k) {
      const auto* q = levels_[k].get();
      if (!q) continue;
      for (auto e = q->next(0); e; e = q->next(e->key))
        out.emplace_back(std::uint32_t(e->key), std::uint32_t(e->value), k);
    }
    return out;
  }

  void assert_staircase(std::uint32_t k) const {
    const auto* q = level(k);
    if (!q) return;
    std::uint64_t last_y = ~std::uint64_t(0);
    for (auto e = q->next(0); e; e = q->next(e->key)) {
      if (e->value >= last_y)
        throw std::logic_error("staircase invariant violated in level " + std::to_string(k));
      last_y = e->value;
    }
  }

 private:
  veb_map<std::uint64_t>& ensure_level(std::uint32_t k) {
    if (k >= levels_.size()) levels_.resize(k + 1);
    if (!levels_[k])
      levels_[k] = std::make_unique<veb_map<std::uint64_t>>(x_universe_, veb_c_);
    return *levels_[k];
  }

  void assert_staircase_around(const veb_map<std::uint64_t>& q, std::uint32_t x,
                               std::uint32_t y) const {
    auto p = q.prev(x);
    if (p && p->value <= y) throw std::logic_error("staircase invariant violated (left)");
    auto s = q.next(x);
    if (s && s->value >= y) throw std::logic_error("staircase invariant violated (right)");
  }

  std::uint64_t x_universe_;
  unsigned veb_c_;
  bool debug_;
  std::vector<std::unique_ptr<veb_map<std::uint64_t>>> levels_;  // [0] unused: sentinel
  std::uint32_t max_nonempty_ = 0;
  mutable fast_stats stats_;
};

// Resolves the chain-end value of the pair (x,y) given the lower bound k,
// assuming every level below the true value holds a pair preceding (x,y).
// Galloping doubling finds the first failing level, then binary search
// pins the largest level s whose staircase still holds a pair strictly
// dominated by (x,y); the answer is s+1. Levels above the universe are
// permanently empty.
inline std::uint32_t compute_next_pair(const queue_family& qf, std::uint32_t x, std::uint32_t y,
                                       std::uint32_t k) {
  const std::uint64_t cap = qf.x_universe();
  auto ok = [&](std::uint64_t s) -> bool {
    if (s == 0) return true;  // sentinel (0,0) precedes every pair
    if (s > cap) return false;
    ++qf.stats().probe_count;
    auto p = qf.prev_pair(s, x);
    return p && p->second < y;
  };

  const std::uint64_t base = k == 0 ? 0 : std::uint64_t(k) - 1;  // ok(base) holds
  std::uint64_t d = 1;
  while (ok(base + d)) d <<= 1;
  std::uint64_t lo = d > 1 ? base + d / 2 : base;
  std::uint64_t hi = base + d;
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (ok(mid))
      lo = mid;
    else
      hi = mid;
  }
  return static_cast<std::uint32_t>(lo + 1);
}

// Static per-symbol occurrence indexes plus the frequency split: a symbol
// counts as frequent when it appears more than n/sqrt(t) times in B.
struct symbol_index {
  std::uint64_t t = 4;
  double freq_threshold = 0;
  std::vector<std::vector<std::uint32_t>> x_occ, y_occ;
  std::vector<std::unique_ptr<veb_map<std::uint64_t>>> x_of, y_of;

  symbol_index(const sequence& a, const sequence& b, std::uint64_t n, unsigned veb_c) {
    t = choose_t(n);
    freq_threshold = static_cast<double>(n) / std::sqrt(static_cast<double>(t));
    std::uint32_t m = std::max(a.max_symbol(), b.max_symbol());
    x_occ = occurrence_lists(a, m);
    y_occ = occurrence_lists(b, m);
    x_of.resize(m + 1);
    y_of.resize(m + 1);
    for (std::uint32_t sym = 1; sym <= m; ++sym) {
      if (!x_occ[sym].empty()) {
        x_of[sym] = std::make_unique<veb_map<std::uint64_t>>(a.size(), veb_c);
        for (std::uint32_t pos : x_occ[sym]) x_of[sym]->insert(pos, pos);
      }
      if (!y_occ[sym].empty()) {
        y_of[sym] = std::make_unique<veb_map<std::uint64_t>>(b.size(), veb_c);
        for (std::uint32_t pos : y_occ[sym]) y_of[sym]->insert(pos, pos);
      }
    }
  }

  bool frequent(std::uint32_t sym) const {
    return static_cast<double>(y_occ[sym].size()) > freq_threshold;
  }
};

struct fast_options {
  unsigned veb_c = 2;
  bool debug_checks = debug_checks_from_env();
};

struct fast_result {
  std::uint64_t length = 0;
  queue_family queues;
  fast_stats stats;
};

namespace fast_detail {

struct pending_pair {
  std::uint32_t x, y, level;
};

}  // namespace fast_detail

// Checks the two end-state facts against the reference enumeration:
// every stored pair is significant with its stored level equal to the
// true chain-end value, and every significant pair is dominated by some
// stored pair on its own level.
inline void verify_end_state(const queue_family& qf, const sequence& a, const sequence& b) {
  auto sig = significant_pairs(a, b);
  lcis_table t = lcis_dp(a, b);
  for (auto [x, y, k] : qf.snapshot()) {
    auto lv = t.lcisto_at(x, y);
    if (!lv || *lv != k)
      throw std::logic_error("end state: stored pair has wrong level");
    const auto& list = sig.of(a.symbol(x));
    bool found = false;
    for (const auto& s : list)
      if (s.x == x && s.y == y) {
        found = true;
        break;
      }
    if (!found) throw std::logic_error("end state: stored pair is not significant");
  }
  for (std::uint32_t sym = 1; sym < sig.by_symbol.size(); ++sym) {
    for (const auto& s : sig.by_symbol[sym]) {
      auto p = qf.prev_pair(s.lcisto, s.x + 1);
      if (!p || p->second > s.y)
        throw std::logic_error("end state: significant pair not dominated on its level");
    }
  }
}

inline fast_result lcis_fast_run(const sequence& a, const sequence& b,
                                 const fast_options& opt = {}) {
  const std::uint64_t n = std::max(a.size(), b.size());
  if (a.empty() || b.empty())
    return {0, queue_family(1, opt.veb_c, opt.debug_checks), fast_stats{}};

  symbol_index idx(a, b, n, opt.veb_c);
  queue_family qf(a.size(), opt.veb_c, opt.debug_checks);
  fast_stats& st = qf.stats();

  std::vector<fast_detail::pending_pair> batch;
  const std::uint32_t m = static_cast<std::uint32_t>(idx.x_occ.size() - 1);
  for (std::uint32_t sym = 1; sym <= m; ++sym) {
    const auto& xs = idx.x_occ[sym];
    const auto& ys = idx.y_occ[sym];
    if (xs.empty() || ys.empty()) continue;
    batch.clear();

    if (!idx.frequent(sym)) {
      ++st.infrequent_symbols;
      for (std::uint32_t x : xs) {
        std::uint32_t k = 0;
        for (std::uint32_t y : ys) {
          k = compute_next_pair(qf, x, y, k);
          batch.push_back({x, y, k});
        }
      }
    } else {
      ++st.frequent_symbols;
      const auto& xv = *idx.x_of[sym];
      const auto& yv = *idx.y_of[sym];
      for (std::uint32_t k = 0; k <= qf.max_nonempty(); ++k) {
        auto extend = [&](std::uint32_t x, std::uint32_t y) {
          auto xn = xv.next(x);
          if (!xn) return;
          auto yn = yv.next(y);
          if (!yn) return;
          batch.push_back({std::uint32_t(xn->key), std::uint32_t(yn->key), k + 1});
        };
        if (k == 0) {
          extend(0, 0);  // sentinel
          continue;
        }
        const auto* q = qf.level(k);
        if (!q) continue;
        for (auto e = q->next(0); e; e = q->next(e->key))
          extend(std::uint32_t(e->key), std::uint32_t(e->value));
      }
    }

    st.pending_pairs += batch.size();
    for (const auto& p : batch) qf.insert_inv(p.level, p.x, p.y);
  }

  if (opt.debug_checks) {
    for (std::uint32_t k = 1; k <= qf.max_nonempty(); ++k) qf.assert_staircase(k);
    verify_end_state(qf, a, b);
  }

  fast_result res{qf.max_nonempty(), std::move(qf), {}};
  res.stats = res.queues.stats();
  return res;
}

inline std::uint64_t lcis_fast(const sequence& a, const sequence& b,
                               fast_stats* stats = nullptr) {
  auto res = lcis_fast_run(a, b);
  if (stats) *stats = res.stats;
  return res.length;
}

}  // namespace lcis
