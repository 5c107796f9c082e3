#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace rri {

/// Seeded deterministic random source. All draws are derived from the
/// mt19937_64 bit stream with explicit transforms, so identical seeds give
/// identical sequences on every platform and standard library:
///   uniform01: top 53 bits of one 64-bit word, scaled by 2^-53 -> [0, 1)
///   gaussian:  Box-Muller on two uniform01 draws, second value cached
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1]: keeps the log finite
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  double cached_{};
  bool has_cached_{false};
};

}  // namespace rri
