#pragma once

#include <cstdint>

namespace pentasolve {

/// One SplitMix64 step: advances `state` and returns the mixed output.
/// Used for seed expansion and stable case hashing.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// xoshiro256++ (Blackman and Vigna). State is expanded from the seed with
/// SplitMix64, so any 64-bit seed is acceptable, including 0.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;

  /// Uniform double in [0, 1), 53 random mantissa bits.
  double uniform01() noexcept { return (next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t s_[4];
};

}  // namespace pentasolve
