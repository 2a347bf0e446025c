#pragma once

#include <cstdint>

namespace hmr {

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

__extension__ using uint128 = unsigned __int128;

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

/// Counter-based generator: the i-th draw is a pure function of (key, i),
/// so any draw can be recomputed without replaying the ones before it.
/// Sequential use via next() walks the counter upwards from zero.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t key) : key_(mix64(key ^ 0x6A09E667F3BCC909ULL)) {}

  constexpr std::uint64_t at(std::uint64_t counter) const {
    return mix64(key_ + (counter + 1) * kGolden);
  }

  constexpr std::uint64_t next() { return at(counter_++); }

  /// Uniform double in [0, 1) with 53 random bits.
  static constexpr double to_unit(std::uint64_t bits) {
    return static_cast<double>(bits >> 11U) * 0x1.0p-53;
  }
  constexpr double unit_at(std::uint64_t counter) const { return to_unit(at(counter)); }
  constexpr double next_unit() { return to_unit(next()); }

  /// Uniform integer in [0, bound), bound > 0 (Lemire multiply-shift with
  /// rejection, consuming draws sequentially).
  std::uint64_t next_below(std::uint64_t bound) {
    auto m = static_cast<uint128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<uint128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64U);
  }

  /// Independent child stream, e.g. one per Monte Carlo trial or per attempt.
  constexpr CounterRng substream(std::uint64_t index) const {
    return CounterRng(mix64(key_ ^ mix64(index + 0x3C6EF372FE94F82BULL)));
  }

  constexpr std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace hmr
