#include "subflag/model_groups.hpp"

#include <cmath>

namespace subflag {

ModelFrame heisenberg_frame() {
  const ChartId h = ChartId::heisenberg;
  auto x_rule = [](const auto& c) {
    using T = typename std::decay_t<decltype(c)>::value_type;
    return Vec3<T>{T(1.0), T(0.0), -(c[1] / 2.0)};
  };
  auto y_rule = [](const auto& c) {
    using T = typename std::decay_t<decltype(c)>::value_type;
    return Vec3<T>{T(0.0), T(1.0), c[0] / 2.0};
  };
  return {"heisenberg", h, VectorField::make(h, "X", x_rule), VectorField::make(h, "Y", y_rule),
          VectorField::constant(h, {0.0, 0.0, 1.0}, "Z")};
}

ModelFrame su2_frame() {
  const ChartId s = ChartId::su2;
  // coords = (phi, theta, psi)
  auto x_rule = [](const auto& c) {
    using T = typename std::decay_t<decltype(c)>::value_type;
    const T s2t = sin(2.0 * c[1]);
    const T c2t = cos(2.0 * c[1]);
    const T s2p = sin(2.0 * c[2]);
    const T c2p = cos(2.0 * c[2]);
    return Vec3<T>{-(c2p / s2t), s2p, c2t * c2p / s2t};
  };
  auto y_rule = [](const auto& c) {
    using T = typename std::decay_t<decltype(c)>::value_type;
    const T s2t = sin(2.0 * c[1]);
    const T c2t = cos(2.0 * c[1]);
    const T s2p = sin(2.0 * c[2]);
    const T c2p = cos(2.0 * c[2]);
    return Vec3<T>{s2p / s2t, c2p, -(c2t * s2p / s2t)};
  };
  return {"su2", s, VectorField::make(s, "X", x_rule), VectorField::make(s, "Y", y_rule),
          VectorField::constant(s, {0.0, 0.0, 1.0}, "Z")};
}

ModelFrame model_frame(ChartId chart) {
  return chart == ChartId::heisenberg ? heisenberg_frame() : su2_frame();
}

}  // namespace subflag
