#include "subflag/codazzi.hpp"

#include <string>

namespace subflag {

std::string_view mode_name(DerivativeMode mode) {
  return mode == DerivativeMode::standard ? "standard" : "lie";
}

DerivativeMode parse_derivative_mode(std::string_view name) {
  if (name == "standard") return DerivativeMode::standard;
  if (name == "lie") return DerivativeMode::lie;
  throw UsageError("unknown derivative mode '" + std::string(name) + "'");
}

namespace {

void require_frame_point(const ModelFrame& frame, const ChartPoint& p) {
  if (frame.chart != p.chart)
    throw ChartMismatchError("frame " + frame.name + " evaluated at a point of chart " +
                             std::string(chart_name(p.chart)));
  require_admissible(p.chart, p.coords);
}

}  // namespace

Vec3<double> decompose_in_frame(const ChartVector& v, const ModelFrame& frame, const ChartPoint& p) {
  require_frame_point(frame, p);
  if (v.chart != p.chart) throw ChartMismatchError("vector and point on different charts");
  const Mat3<double> basis =
      from_columns(frame.X.at(p.coords), frame.Y.at(p.coords), frame.Z.at(p.coords));
  return solve3(basis, v.components);
}

FrameDecomposition<double> derivation_equations(const ModelFrame& frame, const ChartPoint& p,
                                                DerivativeMode mode) {
  require_frame_point(frame, p);
  const auto rows = frame_derivative_rows(frame, p.coords, mode);
  FrameDecomposition<double> dec;
  dec.mode = mode;
  dec.point = p;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      dec.gamma[i][j] = {rows[i][j][0], rows[i][j][1]};
      dec.b[i][j] = rows[i][j][2];
    }
    dec.weingarten[i] = rows[i][2];
  }
  return dec;
}

MatrixField codazzi_matrix_field(const ModelFrame& frame, int which, DerivativeMode mode) {
  return MatrixField::make(frame.chart, [frame, which, mode](const auto& coords) {
    const auto m = codazzi_matrices_at(frame, coords, mode);
    return which == 0 ? m.A1 : m.A2;
  });
}

Mat3<double> codazzi_curvature(const ModelFrame& frame, const ChartPoint& p, DerivativeMode mode) {
  require_frame_point(frame, p);
  const auto a = codazzi_matrices_at(frame, p.coords, mode);
  const Mat3<double> dy_a1 = matrix_directional_derivative(frame.Y, codazzi_matrix_field(frame, 0, mode), p);
  const Mat3<double> dx_a2 = matrix_directional_derivative(frame.X, codazzi_matrix_field(frame, 1, mode), p);
  return dy_a1 - dx_a2 + commutator(a.A1, a.A2);
}

}  // namespace subflag
