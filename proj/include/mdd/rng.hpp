#pragma once

#include <cstdint>
#include <random>

namespace mdd {

/// Seeded source for sampling and circuit generation. Wraps std::mt19937_64,
/// whose output sequence is fixed by the standard, and derives reals and
/// bounded integers with explicit arithmetic so sequences are reproducible
/// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mdd
