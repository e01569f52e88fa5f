#pragma once

#include <cstdint>

namespace kuranet {

/// Seedable, splittable 64-bit generator (splitmix64 state transition).
///
/// The exact contract, so other implementations can reproduce streams:
///   state' = state + 0x9E3779B97F4A7C15
///   z = state'; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
///   z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31
///   next_u64() returns z.
/// uniform01() maps next_u64() >> 11 onto [0,1) by multiplying 2^-53.
/// split() draws one value from the parent and seeds a child with it.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [low, high).
  double uniform(double low, double high) {
    return low + uniform01() * (high - low);
  }

  /// Integer in [low, high] inclusive, via rejection-free modulo of a
  /// 64-bit draw (bias is negligible for the small ranges used here).
  std::uint64_t uniform_int(std::uint64_t low, std::uint64_t high) {
    return low + next_u64() % (high - low + 1);
  }

  SplitMix64 split() { return SplitMix64(next_u64()); }

 private:
  std::uint64_t state_;
};

}  // namespace kuranet
