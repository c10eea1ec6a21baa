#include "subflag/chart_fields.hpp"

#include <cmath>
#include <string>

namespace subflag {

std::string_view chart_name(ChartId chart) {
  switch (chart) {
    case ChartId::heisenberg:
      return "heisenberg";
    case ChartId::su2:
      return "su2";
  }
  return "unknown";
}

ChartId parse_chart(std::string_view name) {
  if (name == "heisenberg") return ChartId::heisenberg;
  if (name == "su2") return ChartId::su2;
  throw UsageError("unknown chart '" + std::string(name) + "'");
}

bool admissible(ChartId chart, const Vec3<double>& coords) {
  for (double c : coords)
    if (!std::isfinite(c)) return false;
  if (chart == ChartId::su2) return std::fabs(std::sin(2.0 * coords[1])) > kSu2SingularityGuard;
  return true;
}

void require_admissible(ChartId chart, const Vec3<double>& coords) {
  if (admissible(chart, coords)) return;
  for (double c : coords)
    if (!std::isfinite(c))
      throw SingularPointError("non-finite coordinate on chart " + std::string(chart_name(chart)));
  throw SingularPointError("sin(2 theta) vanishes at theta = " + std::to_string(coords[1]) +
                           " on chart su2");
}

VectorField VectorField::constant(ChartId chart, Vec3<double> components, std::string name) {
  return make(chart, std::move(name), [components](const auto& c) {
    using T = typename std::decay_t<decltype(c)>::value_type;
    return Vec3<T>{T(components[0]), T(components[1]), T(components[2])};
  });
}

MatrixField MatrixField::constant(ChartId chart, const Mat3<double>& value) {
  return make(chart, [value](const auto& c) {
    using T = typename std::decay_t<decltype(c)>::value_type;
    Mat3<T> m;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m[i][j] = T(value[i][j]);
    return m;
  });
}

namespace {

void require_chart(ChartId expected, ChartId actual) {
  if (expected != actual)
    throw ChartMismatchError("field on chart " + std::string(chart_name(actual)) +
                             " used at a point of chart " + std::string(chart_name(expected)));
}

}  // namespace

ChartVector evaluate_field(const VectorField& field, const ChartPoint& p) {
  require_chart(p.chart, field.chart());
  require_admissible(p.chart, p.coords);
  return {p.chart, field.at(p.coords)};
}

ChartVector directional_derivative(const VectorField& u, const VectorField& v, const ChartPoint& p) {
  require_chart(p.chart, u.chart());
  require_chart(p.chart, v.chart());
  require_admissible(p.chart, p.coords);
  return {p.chart, standard_derivative(u, v, p.coords)};
}

ChartVector lie_bracket(const VectorField& u, const VectorField& v, const ChartPoint& p) {
  require_chart(p.chart, u.chart());
  require_chart(p.chart, v.chart());
  require_admissible(p.chart, p.coords);
  return {p.chart, bracket_at(u, v, p.coords)};
}

Mat3<double> matrix_directional_derivative(const VectorField& u, const MatrixField& m,
                                           const ChartPoint& p) {
  require_chart(p.chart, u.chart());
  require_chart(p.chart, m.chart());
  require_admissible(p.chart, p.coords);
  const Vec3<double> dir = u.at(p.coords);
  Vec3<D1> lifted;
  for (std::size_t k = 0; k < 3; ++k) lifted[k] = D1{p.coords[k], dir[k]};
  const Mat3<D1> out = m.at(lifted);
  Mat3<double> d;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) d[i][j] = out[i][j].eps;
  return d;
}

}  // namespace subflag
