#pragma once

#include <cstdint>
#include <limits>

#include "bicrit/rational.hpp"

namespace bicrit {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) noexcept {
  return mix64(a ^ mix64(b + 0x632be59bd9b4e019ULL));
}

// Counter-based stream: the k-th output is a pure function of (key, k), so
// independent streams are obtained by splitting on a key.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t key) noexcept : key_(mix64(key)) {}

  Rng split(std::uint64_t stream) const noexcept { return Rng(hash_combine(key_, stream)); }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept { return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  // Uniform integer in [0, bound); bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do {
      x = (*this)();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // True with probability exactly p (p clamped to [0, 1]) up to 2^-64 resolution:
  // draws u in [0, 2^64) and tests u < p * 2^64 in exact arithmetic.
  bool bernoulli(const Rational& p);

  // Exact real in [0, 1) on the 2^-64 grid.
  Rational unit();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace bicrit
