#pragma once

// Instance generators: a recursive block family whose marker pairs are all
// significant (certifying a dense lower bound on the significant-pair
// count), dummy-prefix padding, and seeded random instances for
// differential testing.

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lcis {

// (x1, x2, ...) -> (2*x1, 2*x1+1, 2*x2, 2*x2+1, ...)
inline std::vector<std::int64_t> inflate(std::span<const std::int64_t> s) {
  std::vector<std::int64_t> out;
  out.reserve(2 * s.size());
  for (std::int64_t v : s) {
    out.push_back(2 * v);
    out.push_back(2 * v + 1);
  }
  return out;
}

inline std::vector<std::int64_t> inflate(const std::vector<std::int64_t>& s) {
  return inflate(std::span<const std::int64_t>(s));
}

struct base_construction {
  std::uint32_t k = 0;
  std::vector<std::int64_t> a, b;
  std::vector<std::uint32_t> block_ends_a, block_ends_b;  // prefix lengths, one per block
  std::int64_t largest = 0;                               // biggest value used
};

namespace genlb_detail {

struct block_family {
  std::vector<std::vector<std::int64_t>> a_blocks, b_blocks;
  std::int64_t largest = 1;
};

// 2^k blocks per side; doubling step: even blocks inflate their parent and
// close with one fresh value, odd blocks are fixed two-element gadgets.
// The three fresh values per step sit above the inflate range 2..2s+1 and
// cross-link the sides: the value closing A's even blocks opens B's odd
// blocks and vice versa, so extending either prefix by one block buys
// exactly one more chain element. Reusing 2s+1 here instead would collide
// with the top of the inflate range and break that exchange.
inline block_family build_blocks(std::uint32_t k) {
  block_family f;
  f.a_blocks = {{1}};
  f.b_blocks = {{1}};
  f.largest = 1;
  for (std::uint32_t step = 0; step < k; ++step) {
    const std::int64_t s = f.largest;
    block_family next;
    next.a_blocks.reserve(2 * f.a_blocks.size());
    next.b_blocks.reserve(2 * f.b_blocks.size());
    for (std::size_t i = 0; i < f.a_blocks.size(); ++i) {
      auto ea = inflate(f.a_blocks[i]);
      ea.push_back(2 * s + 2);
      next.a_blocks.push_back(std::move(ea));
      next.a_blocks.push_back({2 * s + 3, 2 * s + 4});
      auto eb = inflate(f.b_blocks[i]);
      eb.push_back(2 * s + 3);
      next.b_blocks.push_back(std::move(eb));
      next.b_blocks.push_back({2 * s + 2, 2 * s + 4});
    }
    next.largest = 2 * s + 4;
    f = std::move(next);
  }
  return f;
}

inline void flatten(const std::vector<std::vector<std::int64_t>>& blocks,
                    std::vector<std::int64_t>& out, std::vector<std::uint32_t>& ends) {
  out.clear();
  ends.clear();
  for (const auto& blk : blocks) {
    out.insert(out.end(), blk.begin(), blk.end());
    ends.push_back(static_cast<std::uint32_t>(out.size()));
  }
}

}  // namespace genlb_detail

// Base family: 2^k blocks per sequence, |A_k| = 2^k + 3k*2^(k-1), and the
// LCIS of the prefixes ending at block i of A and block j of B equals
// i + j + 2^k (blocks 0-based).
inline base_construction build_base(std::uint32_t k) {
  if (k > 20) throw std::invalid_argument("build_base: k > 20");
  auto f = genlb_detail::build_blocks(k);
  base_construction out;
  out.k = k;
  out.largest = f.largest;
  genlb_detail::flatten(f.a_blocks, out.a, out.block_ends_a);
  genlb_detail::flatten(f.b_blocks, out.b, out.block_ends_b);
  return out;
}

struct adversarial_instance {
  std::uint32_t k = 0;
  std::vector<std::int64_t> a, b;
  std::vector<std::int64_t> tau;  // k marker symbols, ascending, all above s_k
  std::vector<std::uint32_t> block_ends_a, block_ends_b;
  std::int64_t s_k = 0;  // largest base value

  // certified count of significant marker pairs: k * 2^(2k)
  std::uint64_t certified_marker_pairs() const {
    return std::uint64_t(k) << (2 * k);
  }
};

// Base family with the run (tau_k, ..., tau_1) appended to every block.
// Every marker pair is significant, and the pair between A-block i and
// B-block j has chain-end value i + j + 2^k + 1.
inline adversarial_instance build_padded(std::uint32_t k) {
  if (k < 1 || k > 12) throw std::invalid_argument("build_padded: k must be in 1..12");
  auto f = genlb_detail::build_blocks(k);
  adversarial_instance out;
  out.k = k;
  out.s_k = f.largest;
  for (std::uint32_t r = 1; r <= k; ++r) out.tau.push_back(f.largest + r);
  for (auto* blocks : {&f.a_blocks, &f.b_blocks})
    for (auto& blk : *blocks)
      for (std::uint32_t r = k; r >= 1; --r) blk.push_back(out.tau[r - 1]);
  genlb_detail::flatten(f.a_blocks, out.a, out.block_ends_a);
  genlb_detail::flatten(f.b_blocks, out.b, out.block_ends_b);
  return out;
}

// Prepends a strictly increasing run of 2n dummies below everything else.
// Original values are shifted up by 2n so all symbols stay positive; the
// LCIS grows by exactly 2n and old significant pairs map to (2n+x, 2n+y).
inline std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> pad_prefix(
    std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("pad_prefix: n must be positive");
  if (a.size() > n || b.size() > n)
    throw std::invalid_argument("pad_prefix: sequences longer than n");
  for (auto s : {a, b})
    for (std::int64_t v : s)
      if (v <= 0) throw std::invalid_argument("pad_prefix: elements must be positive");
  const std::int64_t shift = static_cast<std::int64_t>(2 * n);
  auto padded = [&](std::span<const std::int64_t> s) {
    std::vector<std::int64_t> out;
    out.reserve(2 * n + s.size());
    for (std::int64_t v = 1; v <= shift; ++v) out.push_back(v);
    for (std::int64_t v : s) out.push_back(v + shift);
    return out;
  };
  return {padded(a), padded(b)};
}

inline std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> pad_prefix(
    const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, std::uint64_t n) {
  return pad_prefix(std::span<const std::int64_t>(a), std::span<const std::int64_t>(b), n);
}

// Two length-n sequences of i.i.d. symbols from 1..alphabet_size,
// deterministic in the seed.
inline std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> gen_random(
    std::size_t n, std::uint64_t alphabet_size, std::uint64_t seed) {
  if (alphabet_size < 1) throw std::invalid_argument("gen_random: alphabet must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(1, static_cast<std::int64_t>(alphabet_size));
  std::vector<std::int64_t> a(n), b(n);
  for (auto& v : a) v = dist(rng);
  for (auto& v : b) v = dist(rng);
  return {std::move(a), std::move(b)};
}

}  // namespace lcis
