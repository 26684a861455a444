#pragma once

#include <cstdint>

namespace ccent {

// xorshift64* generator. Small, fast, and identical on every platform, so
// seeds printed in reports reproduce the exact instance stream anywhere.
class Xorshift64Star {
 public:
  explicit constexpr Xorshift64Star(uint64_t seed)
      : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  constexpr uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dull;
  }

  // Uniform value in [0, bound) via multiply-shift.
  constexpr uint64_t below(uint64_t bound) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Uniform in [0, 1) with 53 bits of precision.
  constexpr double unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  uint64_t state_;
};

}  // namespace ccent
