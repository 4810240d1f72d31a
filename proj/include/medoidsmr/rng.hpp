#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "medoidsmr/errors.hpp"

namespace medoidsmr {

/// Deterministic random source backing every seeded operation.
///
/// The draw sequence is part of the external contract: the engine is
/// std::mt19937_64, whose output is fixed by the C++ standard, and all value
/// mappings are implemented here instead of with std::*_distribution (whose
/// algorithms differ between standard libraries). Same seed, same platform or
/// not, same sequence:
///   - next_u64:      raw engine output
///   - next_double:   (next_u64() >> 11) * 2^-53, uniform in [0, 1)
///   - next_index(n): unbiased rejection sampling on next_u64
///   - next_gaussian: Marsaglia polar method on next_double pairs
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random mantissa bits.
  double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). Throws InvalidInputError when n is zero.
  std::uint64_t next_index(std::uint64_t n) {
    if (n == 0) {
      throw InvalidInputError("next_index: n must be positive");
    }
    // Accept draws in [threshold, 2^64); that range has size divisible by n.
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) {
        return (x - threshold) % n;
      }
    }
  }

  /// Standard normal deviate. Generates pairs and caches the spare.
  double next_gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    double v = 0.0;
    double s = 0.0;
    do {
      u = 2.0 * next_double() - 1.0;
      v = 2.0 * next_double() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace medoidsmr
