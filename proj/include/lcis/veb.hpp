#pragma once

// Truncated van Emde Boas successor map.
//
// Stores distinct integer keys in 1..universe, one payload per key, with
// find / next / prev / min / max / insert / erase in O(log log universe)
// recursive descents. The recursion splits each universe into 2^ceil(b/2)
// child universes of 2^floor(b/2) keys each (b = padded bit width), but is
// cut off early: any substructure whose universe is at most K^2, with
// K = (log2 universe)^c, is a flat ordered dictionary instead of a
// recursive node. Nonempty-child bitmaps exist only above the cutoff, so an
// empty map costs O(universe / K) space instead of O(universe), and a
// populated one O(count + universe / K).
//
// Min/Max of every node are held outside the child structures, which makes
// them available in constant time during the successor recursion.
//
// Not thread-safe; confine a map to one thread at a time.

#include <bit>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace lcis {

template <class Payload>
struct veb_entry {
  std::uint64_t key = 0;
  Payload value{};
};

namespace veb_detail {

struct config {
  std::uint64_t leaf_universe;  // substructures at or below this size are dictionaries
};

template <class P>
struct subtree;

// Flat ordered dictionary: entries sorted by key, kept in chunks of at
// most kChunkCap so queries are O(log size) and updates move little data.
template <class P>
struct leaf_node {
  static constexpr std::size_t kChunkCap = 64;

  std::vector<std::vector<veb_entry<P>>> chunks;  // nonempty, ascending keys
  std::vector<std::uint64_t> chunk_max;           // back key of each chunk
  std::uint64_t count = 0;

  // first chunk whose max key is >= key, or chunks.size()
  std::size_t locate(std::uint64_t key) const {
    return static_cast<std::size_t>(
        std::lower_bound(chunk_max.begin(), chunk_max.end(), key) - chunk_max.begin());
  }

  static typename std::vector<veb_entry<P>>::iterator chunk_lower(
      std::vector<veb_entry<P>>& ch, std::uint64_t key) {
    return std::lower_bound(ch.begin(), ch.end(), key,
                            [](const veb_entry<P>& e, std::uint64_t k) { return e.key < k; });
  }
  static typename std::vector<veb_entry<P>>::const_iterator chunk_lower(
      const std::vector<veb_entry<P>>& ch, std::uint64_t key) {
    return std::lower_bound(ch.begin(), ch.end(), key,
                            [](const veb_entry<P>& e, std::uint64_t k) { return e.key < k; });
  }

  bool insert(std::uint64_t key, const P& value) {
    if (chunks.empty()) {
      chunks.push_back({veb_entry<P>{key, value}});
      chunk_max.push_back(key);
      count = 1;
      return true;
    }
    std::size_t ci = locate(key);
    if (ci == chunks.size()) --ci;
    auto& ch = chunks[ci];
    auto it = chunk_lower(ch, key);
    if (it != ch.end() && it->key == key) {
      it->value = value;
      return false;
    }
    ch.insert(it, veb_entry<P>{key, value});
    chunk_max[ci] = ch.back().key;
    ++count;
    if (ch.size() > kChunkCap) split(ci);
    return true;
  }

  void split(std::size_t ci) {
    auto& ch = chunks[ci];
    std::vector<veb_entry<P>> upper(ch.begin() + ch.size() / 2, ch.end());
    ch.erase(ch.begin() + ch.size() / 2, ch.end());
    ch.shrink_to_fit();
    chunk_max[ci] = ch.back().key;
    chunk_max.insert(chunk_max.begin() + ci + 1, upper.back().key);
    chunks.insert(chunks.begin() + ci + 1, std::move(upper));
  }

  // returns false when the key is absent
  bool erase(std::uint64_t key) {
    std::size_t ci = locate(key);
    if (ci == chunks.size()) return false;
    auto& ch = chunks[ci];
    auto it = chunk_lower(ch, key);
    if (it == ch.end() || it->key != key) return false;
    ch.erase(it);
    --count;
    if (ch.empty()) {
      chunks.erase(chunks.begin() + ci);
      chunk_max.erase(chunk_max.begin() + ci);
    } else {
      chunk_max[ci] = ch.back().key;
    }
    return true;
  }

  const P* find(std::uint64_t key) const {
    std::size_t ci = locate(key);
    if (ci == chunks.size()) return nullptr;
    auto it = chunk_lower(chunks[ci], key);
    if (it == chunks[ci].end() || it->key != key) return nullptr;
    return &it->value;
  }

  std::optional<veb_entry<P>> next(std::uint64_t key) const {
    // first chunk containing a key strictly greater
    std::size_t ci = static_cast<std::size_t>(
        std::upper_bound(chunk_max.begin(), chunk_max.end(), key) - chunk_max.begin());
    if (ci == chunks.size()) return std::nullopt;
    const auto& ch = chunks[ci];
    auto it = std::upper_bound(ch.begin(), ch.end(), key,
                               [](std::uint64_t k, const veb_entry<P>& e) { return k < e.key; });
    return *it;  // exists: chunk max > key
  }

  std::optional<veb_entry<P>> prev(std::uint64_t key) const {
    if (count == 0 || chunks.front().front().key >= key) return std::nullopt;
    std::size_t ci = locate(key);
    if (ci == chunks.size()) return chunks.back().back();
    const auto& ch = chunks[ci];
    auto it = chunk_lower(ch, key);
    if (it != ch.begin()) return *(it - 1);
    return chunks[ci - 1].back();  // ci > 0: front key < key was checked above
  }

  std::optional<veb_entry<P>> min() const {
    if (count == 0) return std::nullopt;
    return chunks.front().front();
  }
  std::optional<veb_entry<P>> max() const {
    if (count == 0) return std::nullopt;
    return chunks.back().back();
  }

  std::size_t memory_bytes() const {
    std::size_t b = sizeof(*this);
    b += chunk_max.capacity() * sizeof(std::uint64_t);
    b += chunks.capacity() * sizeof(std::vector<veb_entry<P>>);
    for (const auto& ch : chunks) b += ch.capacity() * sizeof(veb_entry<P>);
    return b;
  }
};

template <class P>
struct inner_node {
  std::uint8_t bits;      // padded key width of this universe
  std::uint8_t low_bits;  // width handled by children; high = bits - low
  std::uint64_t count = 0;
  veb_entry<P> min_e{};
  veb_entry<P> max_e{};
  std::vector<std::unique_ptr<subtree<P>>> kids;  // allocated on first child insert
  std::unique_ptr<subtree<P>> aux;                // indices of nonempty children
  std::vector<std::uint64_t> hbits;               // nonempty-child bitmap

  explicit inner_node(std::uint8_t b) : bits(b), low_bits(static_cast<std::uint8_t>(b / 2)) {}

  std::uint64_t hi(std::uint64_t x) const { return x >> low_bits; }
  std::uint64_t lo(std::uint64_t x) const { return x & ((std::uint64_t(1) << low_bits) - 1); }
  std::uint64_t compose(std::uint64_t i, std::uint64_t l) const { return (i << low_bits) | l; }
  std::uint64_t child_slots() const { return std::uint64_t(1) << (bits - low_bits); }

  bool h_test(std::uint64_t i) const {
    return !hbits.empty() && (hbits[i >> 6] >> (i & 63)) & 1;
  }
  void h_set(std::uint64_t i) { hbits[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void h_clear(std::uint64_t i) { hbits[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
};

template <class P>
struct subtree {
  std::variant<leaf_node<P>, inner_node<P>> impl;

  explicit subtree(leaf_node<P> l) : impl(std::move(l)) {}
  explicit subtree(inner_node<P> n) : impl(std::move(n)) {}

  std::uint64_t count() const {
    if (auto* l = std::get_if<leaf_node<P>>(&impl)) return l->count;
    return std::get<inner_node<P>>(impl).count;
  }
};

template <class P>
std::unique_ptr<subtree<P>> make_subtree(std::uint8_t bits, const config& cfg) {
  if ((std::uint64_t(1) << bits) <= cfg.leaf_universe)
    return std::make_unique<subtree<P>>(leaf_node<P>{});
  return std::make_unique<subtree<P>>(inner_node<P>(bits));
}

// All subtree keys are 0-based local keys in [0, 2^bits).

template <class P>
bool st_insert(subtree<P>& st, std::uint64_t key, const P& value, const config& cfg,
               std::uint64_t& descents);
template <class P>
bool st_erase(subtree<P>& st, std::uint64_t key, std::uint64_t& descents);
template <class P>
const P* st_find(const subtree<P>& st, std::uint64_t key, std::uint64_t& descents);
template <class P>
std::optional<veb_entry<P>> st_next(const subtree<P>& st, std::uint64_t key,
                                    std::uint64_t& descents);
template <class P>
std::optional<veb_entry<P>> st_prev(const subtree<P>& st, std::uint64_t key,
                                    std::uint64_t& descents);

template <class P>
std::optional<veb_entry<P>> st_min(const subtree<P>& st) {
  if (auto* l = std::get_if<leaf_node<P>>(&st.impl)) return l->min();
  const auto& n = std::get<inner_node<P>>(st.impl);
  if (n.count == 0) return std::nullopt;
  return n.min_e;
}

template <class P>
std::optional<veb_entry<P>> st_max(const subtree<P>& st) {
  if (auto* l = std::get_if<leaf_node<P>>(&st.impl)) return l->max();
  const auto& n = std::get<inner_node<P>>(st.impl);
  if (n.count == 0) return std::nullopt;
  return n.max_e;
}

template <class P>
bool st_insert(subtree<P>& st, std::uint64_t key, const P& value, const config& cfg,
               std::uint64_t& descents) {
  ++descents;
  if (auto* l = std::get_if<leaf_node<P>>(&st.impl)) return l->insert(key, value);
  auto& n = std::get<inner_node<P>>(st.impl);

  if (n.count == 0) {
    n.min_e = n.max_e = veb_entry<P>{key, value};
    n.count = 1;
    return true;
  }
  if (n.count == 1) {
    if (key == n.min_e.key) {
      n.min_e.value = value;
      n.max_e.value = value;
      return false;
    }
    if (key < n.min_e.key) {
      n.max_e = n.min_e;
      n.min_e = veb_entry<P>{key, value};
    } else {
      n.max_e = veb_entry<P>{key, value};
    }
    n.count = 2;
    return true;
  }
  if (key == n.min_e.key) {
    n.min_e.value = value;
    return false;
  }
  if (key == n.max_e.key) {
    n.max_e.value = value;
    return false;
  }
  // keys strictly between min and max live in the children
  veb_entry<P> e{key, value};
  if (key < n.min_e.key) {
    std::swap(e, n.min_e);
  } else if (key > n.max_e.key) {
    std::swap(e, n.max_e);
  }
  if (n.kids.empty()) {
    n.kids.resize(n.child_slots());
    n.hbits.assign((n.child_slots() + 63) / 64, 0);
    n.aux = make_subtree<P>(static_cast<std::uint8_t>(n.bits - n.low_bits), cfg);
  }
  std::uint64_t i = n.hi(e.key);
  if (!n.kids[i]) n.kids[i] = make_subtree<P>(n.low_bits, cfg);
  bool was_empty = n.kids[i]->count() == 0;
  bool is_new = st_insert(*n.kids[i], n.lo(e.key), e.value, cfg, descents);
  if (was_empty) {
    st_insert(*n.aux, i, P{}, cfg, descents);
    n.h_set(i);
  }
  if (is_new) ++n.count;
  return is_new;
}

template <class P>
bool st_erase(subtree<P>& st, std::uint64_t key, std::uint64_t& descents) {
  ++descents;
  if (auto* l = std::get_if<leaf_node<P>>(&st.impl)) return l->erase(key);
  auto& n = std::get<inner_node<P>>(st.impl);

  if (n.count == 0) return false;
  if (n.count == 1) {
    if (key != n.min_e.key) return false;
    n.count = 0;
    return true;
  }
  if (n.count == 2) {
    if (key == n.min_e.key)
      n.min_e = n.max_e;
    else if (key == n.max_e.key)
      n.max_e = n.min_e;
    else
      return false;
    n.count = 1;
    return true;
  }

  auto erase_from_child = [&](std::uint64_t i, std::uint64_t local) -> bool {
    if (!n.kids[i]) return false;
    if (!st_erase(*n.kids[i], local, descents)) return false;
    if (n.kids[i]->count() == 0) {
      n.kids[i].reset();
      st_erase(*n.aux, i, descents);
      n.h_clear(i);
    }
    return true;
  };

  if (key == n.min_e.key) {
    // promote the smallest child element to min
    std::uint64_t i = st_min(*n.aux)->key;
    auto ce = *st_min(*n.kids[i]);
    n.min_e = veb_entry<P>{n.compose(i, ce.key), ce.value};
    erase_from_child(i, ce.key);
    --n.count;
    return true;
  }
  if (key == n.max_e.key) {
    std::uint64_t i = st_max(*n.aux)->key;
    auto ce = *st_max(*n.kids[i]);
    n.max_e = veb_entry<P>{n.compose(i, ce.key), ce.value};
    erase_from_child(i, ce.key);
    --n.count;
    return true;
  }
  if (key < n.min_e.key || key > n.max_e.key) return false;
  if (!erase_from_child(n.hi(key), n.lo(key))) return false;
  --n.count;
  return true;
}

template <class P>
const P* st_find(const subtree<P>& st, std::uint64_t key, std::uint64_t& descents) {
  ++descents;
  if (auto* l = std::get_if<leaf_node<P>>(&st.impl)) return l->find(key);
  const auto& n = std::get<inner_node<P>>(st.impl);
  if (n.count == 0) return nullptr;
  if (key == n.min_e.key) return &n.min_e.value;
  if (n.count >= 2 && key == n.max_e.key) return &n.max_e.value;
  if (n.count <= 2 || key < n.min_e.key || key > n.max_e.key) return nullptr;
  std::uint64_t i = n.hi(key);
  if (!n.h_test(i)) return nullptr;
  return st_find(*n.kids[i], n.lo(key), descents);
}

template <class P>
std::optional<veb_entry<P>> st_next(const subtree<P>& st, std::uint64_t key,
                                    std::uint64_t& descents) {
  ++descents;
  if (auto* l = std::get_if<leaf_node<P>>(&st.impl)) return l->next(key);
  const auto& n = std::get<inner_node<P>>(st.impl);
  if (n.count == 0 || key >= n.max_e.key) return std::nullopt;
  if (key < n.min_e.key) return n.min_e;
  if (n.count == 2) return n.max_e;
  std::uint64_t i = n.hi(key);
  if (n.h_test(i) && n.lo(key) < st_max(*n.kids[i])->key) {
    auto e = st_next(*n.kids[i], n.lo(key), descents);
    return veb_entry<P>{n.compose(i, e->key), e->value};
  }
  auto j = st_next(*n.aux, i, descents);
  if (j) {
    auto e = *st_min(*n.kids[j->key]);
    return veb_entry<P>{n.compose(j->key, e.key), e.value};
  }
  return n.max_e;
}

template <class P>
std::optional<veb_entry<P>> st_prev(const subtree<P>& st, std::uint64_t key,
                                    std::uint64_t& descents) {
  ++descents;
  if (auto* l = std::get_if<leaf_node<P>>(&st.impl)) return l->prev(key);
  const auto& n = std::get<inner_node<P>>(st.impl);
  if (n.count == 0 || key <= n.min_e.key) return std::nullopt;
  if (key > n.max_e.key) return n.max_e;
  if (n.count == 2) return n.min_e;
  std::uint64_t i = n.hi(key);
  if (n.h_test(i) && n.lo(key) > st_min(*n.kids[i])->key) {
    auto e = st_prev(*n.kids[i], n.lo(key), descents);
    return veb_entry<P>{n.compose(i, e->key), e->value};
  }
  auto j = st_prev(*n.aux, i, descents);
  if (j) {
    auto e = *st_max(*n.kids[j->key]);
    return veb_entry<P>{n.compose(j->key, e.key), e.value};
  }
  return n.min_e;
}

template <class P>
std::size_t st_memory_bytes(const subtree<P>& st) {
  if (auto* l = std::get_if<leaf_node<P>>(&st.impl))
    return l->memory_bytes() + (sizeof(subtree<P>) - sizeof(leaf_node<P>));
  const auto& n = std::get<inner_node<P>>(st.impl);
  std::size_t b = sizeof(subtree<P>);
  b += n.kids.capacity() * sizeof(std::unique_ptr<subtree<P>>);
  b += n.hbits.capacity() * sizeof(std::uint64_t);
  if (n.aux) b += st_memory_bytes(*n.aux);
  for (const auto& k : n.kids)
    if (k) b += st_memory_bytes(*k);
  return b;
}

template <class P>
std::uint64_t st_h_bits(const subtree<P>& st) {
  if (std::holds_alternative<leaf_node<P>>(st.impl)) return 0;
  const auto& n = std::get<inner_node<P>>(st.impl);
  std::uint64_t bits = n.hbits.size() * 64;
  if (n.aux) bits += st_h_bits(*n.aux);
  for (const auto& k : n.kids)
    if (k) bits += st_h_bits(*k);
  return bits;
}

}  // namespace veb_detail

template <class Payload>
class veb_map {
 public:
  using entry = veb_entry<Payload>;

  explicit veb_map(std::uint64_t universe, unsigned threshold_exponent = 2)
      : universe_(universe), c_(threshold_exponent) {
    if (universe == 0) throw std::invalid_argument("veb_map: universe must be >= 1");
    if (threshold_exponent == 0 || threshold_exponent > 8)
      throw std::invalid_argument("veb_map: threshold exponent out of range");
    bits_ = universe <= 1 ? 0 : static_cast<std::uint8_t>(std::bit_width(universe - 1));
    double lg = universe <= 1 ? 0.0 : std::log2(static_cast<double>(universe));
    k_ = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::floor(std::pow(lg, double(c_)) + 1e-9)));
    // cap K^2 so the multiplication cannot wrap
    std::uint64_t k2 = k_ > (std::uint64_t(1) << 31) ? ~std::uint64_t(0) : k_ * k_;
    cfg_.leaf_universe = std::max<std::uint64_t>(2, k2);
  }

  std::uint64_t universe() const { return universe_; }
  std::uint64_t threshold_k() const { return k_; }
  std::uint64_t leaf_universe_threshold() const { return cfg_.leaf_universe; }
  std::uint64_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  // key in 1..universe; an existing key has its payload overwritten
  void insert(std::uint64_t key, const Payload& value) {
    check_key(key);
    if (!root_) root_ = veb_detail::make_subtree<Payload>(bits_, cfg_);
    if (veb_detail::st_insert(*root_, key - 1, value, cfg_, descents_)) ++size_;
  }

  // key must be present
  void erase(std::uint64_t key) {
    check_key(key);
    if (!root_ || !veb_detail::st_erase(*root_, key - 1, descents_))
      throw std::logic_error("veb_map::erase: key not present");
    --size_;
    if (size_ == 0) root_.reset();
  }

  std::optional<Payload> find(std::uint64_t key) const {
    if (key < 1 || key > universe_ || !root_) return std::nullopt;
    const Payload* p = veb_detail::st_find(*root_, key - 1, descents_);
    if (!p) return std::nullopt;
    return *p;
  }

  // smallest stored key strictly greater than `key`; key 0 means "first"
  std::optional<entry> next(std::uint64_t key) const {
    if (key > universe_) throw std::out_of_range("veb_map::next: key out of range");
    if (!root_) return std::nullopt;
    if (key == 0) return min();
    auto e = veb_detail::st_next(*root_, key - 1, descents_);
    if (!e) return std::nullopt;
    return entry{e->key + 1, e->value};
  }

  // largest stored key strictly smaller than `key`; key universe+1 allowed
  std::optional<entry> prev(std::uint64_t key) const {
    if (key < 1 || key > universe_ + 1) throw std::out_of_range("veb_map::prev: key out of range");
    if (!root_) return std::nullopt;
    if (key == universe_ + 1) return max();
    auto e = veb_detail::st_prev(*root_, key - 1, descents_);
    if (!e) return std::nullopt;
    return entry{e->key + 1, e->value};
  }

  std::optional<entry> min() const {
    if (!root_) return std::nullopt;
    auto e = veb_detail::st_min(*root_);
    if (!e) return std::nullopt;
    return entry{e->key + 1, e->value};
  }

  std::optional<entry> max() const {
    if (!root_) return std::nullopt;
    auto e = veb_detail::st_max(*root_);
    if (!e) return std::nullopt;
    return entry{e->key + 1, e->value};
  }

  // --- instrumentation ---

  // recursive descents performed since the last reset
  std::uint64_t descents() const { return descents_; }
  void reset_descents() const { descents_ = 0; }

  std::size_t memory_bytes() const {
    return sizeof(*this) + (root_ ? veb_detail::st_memory_bytes(*root_) : 0);
  }

  // total bits allocated across all nonempty-child bitmaps
  std::uint64_t h_bits_allocated() const {
    return root_ ? veb_detail::st_h_bits(*root_) : 0;
  }

 private:
  void check_key(std::uint64_t key) const {
    if (key < 1 || key > universe_) throw std::out_of_range("veb_map: key outside universe");
  }

  std::uint64_t universe_;
  unsigned c_;
  std::uint8_t bits_ = 0;
  std::uint64_t k_ = 1;
  veb_detail::config cfg_{};
  std::uint64_t size_ = 0;
  std::unique_ptr<veb_detail::subtree<Payload>> root_;
  mutable std::uint64_t descents_ = 0;
};

}  // namespace lcis
