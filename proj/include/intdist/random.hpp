#pragma once

// Seeded sampling with a fixed bit-level recipe, so suites reproduce across
// standard libraries (std::uniform_real_distribution is not portable).

#include "intdist/types.hpp"

#include <cstdint>
#include <random>

namespace intdist {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(unit() * static_cast<double>(n)); }
  Point point_in(const Rect& box) { return {uniform(box.lo.x(), box.hi.x()), uniform(box.lo.y(), box.hi.y())}; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace intdist
