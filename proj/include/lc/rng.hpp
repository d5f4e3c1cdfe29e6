#pragma once

#include <cstdint>

namespace lc {

/// Counter-seeded splitmix64 stream. Every (seed, index) pair yields an
/// independent, platform-stable sequence, so Monte-Carlo runs can be
/// partitioned across threads without losing determinism.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t index)
      : state_(mix(seed + 0x9E3779B97F4A7C15ULL) ^ mix(index + 0xD1B54A32D192ED03ULL)) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform double in [0, 1), built from the top 53 bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

}  // namespace lc
