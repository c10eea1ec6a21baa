#pragma once

// Seeded sampling of chart points and rational parameters.
//
// The generator is std::mt19937_64. Reals are formed from the top 53 bits
// of one draw, (draw >> 11) * 2^-53, rather than through
// std::uniform_real_distribution, whose output is implementation-defined;
// this keeps every seeded document identical across standard libraries.

#include <cstdint>
#include <random>

#include "subflag/chart_fields.hpp"
#include "subflag/scalar.hpp"

namespace subflag {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);

  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);

  /// Admissible point: heisenberg from [-2, 2]^3; su2 with phi, psi in
  /// [0, 2 pi) and theta in [0.1, pi/2 - 0.1].
  ChartPoint point(ChartId chart);

  /// p/q with p in [-max_num, max_num], q in [1, max_den].
  Rational rational(std::int64_t max_num = 9, std::int64_t max_den = 6);

 private:
  std::mt19937_64 engine_;
};

}  // namespace subflag
