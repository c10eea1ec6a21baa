#include "subflag/sampling.hpp"

#include <numbers>

namespace subflag {

double Sampler::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
  std::uint64_t draw = engine_();
  while (limit != 0 && draw >= limit) draw = engine_();
  return lo + static_cast<std::int64_t>(span == 0 ? draw : draw % span);
}

ChartPoint Sampler::point(ChartId chart) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (chart == ChartId::heisenberg) {
    const double x = uniform(-2.0, 2.0);
    const double y = uniform(-2.0, 2.0);
    const double z = uniform(-2.0, 2.0);
    return {chart, {x, y, z}};
  }
  const double phi = uniform(0.0, two_pi);
  const double theta = uniform(0.1, std::numbers::pi / 2.0 - 0.1);
  const double psi = uniform(0.0, two_pi);
  return {chart, {phi, theta, psi}};
}

Rational Sampler::rational(std::int64_t max_num, std::int64_t max_den) {
  const std::int64_t num = integer(-max_num, max_num);
  const std::int64_t den = integer(1, max_den);
  return Rational(num) / Rational(den);
}

}  // namespace subflag
