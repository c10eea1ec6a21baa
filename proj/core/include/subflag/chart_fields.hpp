#pragma once

// Vector and matrix fields on a 3D coordinate chart, differentiated exactly
// with forward-mode dual numbers.
//
// Two charts exist: "heisenberg" with coordinates (x, y, z) and "su2" with
// Euler-type angles (phi, theta, psi) on the unit quaternions. Vectors are
// always expressed by their coefficients in the coordinate basis of the
// chart, e.g. (d_phi, d_theta, d_psi) on su2.

#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include "subflag/dual.hpp"
#include "subflag/errors.hpp"
#include "subflag/linalg.hpp"

namespace subflag {

using D1 = Dual<double>;
using D2 = Dual<D1>;

enum class ChartId { heisenberg, su2 };

std::string_view chart_name(ChartId chart);
ChartId parse_chart(std::string_view name);

/// Smallest admissible |sin(2 theta)| on the su2 chart.
inline constexpr double kSu2SingularityGuard = 1e-8;

struct ChartPoint {
  ChartId chart;
  Vec3<double> coords;

  friend bool operator==(const ChartPoint&, const ChartPoint&) = default;
};

struct ChartVector {
  ChartId chart;
  Vec3<double> components;

  friend bool operator==(const ChartVector&, const ChartVector&) = default;
};

/// True when the coordinates are finite and, on su2, |sin(2 theta)| > 1e-8.
bool admissible(ChartId chart, const Vec3<double>& coords);
inline bool admissible(const ChartPoint& p) { return admissible(p.chart, p.coords); }

/// Throws SingularPointError unless admissible().
void require_admissible(ChartId chart, const Vec3<double>& coords);

/// A smooth vector field on one chart. The rule is stored for the scalar
/// types the library differentiates through: double, Dual<double> and
/// Dual<Dual<double>>.
class VectorField {
 public:
  template <typename Rule>
  static VectorField make(ChartId chart, std::string name, Rule rule) {
    VectorField f;
    f.chart_ = chart;
    f.name_ = std::move(name);
    f.rule0_ = [rule](const Vec3<double>& c) { return rule(c); };
    f.rule1_ = [rule](const Vec3<D1>& c) { return rule(c); };
    f.rule2_ = [rule](const Vec3<D2>& c) { return rule(c); };
    return f;
  }

  /// Constant components everywhere on the chart.
  static VectorField constant(ChartId chart, Vec3<double> components, std::string name = "const");

  ChartId chart() const { return chart_; }
  const std::string& name() const { return name_; }

  template <typename T>
  Vec3<T> at(const Vec3<T>& coords) const {
    if constexpr (std::is_same_v<T, double>) {
      return rule0_(coords);
    } else if constexpr (std::is_same_v<T, D1>) {
      return rule1_(coords);
    } else {
      static_assert(std::is_same_v<T, D2>, "VectorField supports double, D1 and D2 only");
      return rule2_(coords);
    }
  }

 private:
  ChartId chart_ = ChartId::heisenberg;
  std::string name_;
  std::function<Vec3<double>(const Vec3<double>&)> rule0_;
  std::function<Vec3<D1>(const Vec3<D1>&)> rule1_;
  std::function<Vec3<D2>(const Vec3<D2>&)> rule2_;
};

/// A smooth 3x3 matrix-valued function on one chart (double and Dual<double>).
class MatrixField {
 public:
  template <typename Rule>
  static MatrixField make(ChartId chart, Rule rule) {
    MatrixField m;
    m.chart_ = chart;
    m.rule0_ = [rule](const Vec3<double>& c) { return rule(c); };
    m.rule1_ = [rule](const Vec3<D1>& c) { return rule(c); };
    return m;
  }

  static MatrixField constant(ChartId chart, const Mat3<double>& value);

  ChartId chart() const { return chart_; }

  template <typename T>
  Mat3<T> at(const Vec3<T>& coords) const {
    if constexpr (std::is_same_v<T, double>) {
      return rule0_(coords);
    } else {
      static_assert(std::is_same_v<T, D1>, "MatrixField supports double and D1 only");
      return rule1_(coords);
    }
  }

 private:
  ChartId chart_ = ChartId::heisenberg;
  std::function<Mat3<double>(const Vec3<double>&)> rule0_;
  std::function<Mat3<D1>(const Vec3<D1>&)> rule1_;
};

/// d v_i / d x_j at `coords`, one dual pass per coordinate direction.
template <typename T>
Mat3<T> jacobian(const VectorField& v, const Vec3<T>& coords) {
  Mat3<T> jac = zero_mat3<T>();
  for (std::size_t j = 0; j < 3; ++j) {
    Vec3<Dual<T>> lifted;
    for (std::size_t k = 0; k < 3; ++k)
      lifted[k] = Dual<T>{coords[k], T(k == j ? 1.0 : 0.0)};
    const Vec3<Dual<T>> out = v.at(lifted);
    for (std::size_t i = 0; i < 3; ++i) jac[i][j] = out[i].eps;
  }
  return jac;
}

/// Component-wise derivative of v along `direction` at `coords`.
template <typename T>
Vec3<T> derivative_along(const Vec3<T>& direction, const VectorField& v, const Vec3<T>& coords) {
  return matvec(jacobian(v, coords), direction);
}

/// delta_u v at `coords` (u evaluated there).
template <typename T>
Vec3<T> standard_derivative(const VectorField& u, const VectorField& v, const Vec3<T>& coords) {
  return derivative_along(u.at(coords), v, coords);
}

/// [u, v] = delta_u v - delta_v u at `coords`.
template <typename T>
Vec3<T> bracket_at(const VectorField& u, const VectorField& v, const Vec3<T>& coords) {
  return standard_derivative(u, v, coords) - standard_derivative(v, u, coords);
}

ChartVector evaluate_field(const VectorField& field, const ChartPoint& p);

/// (delta_u v)(p): derivative of v's coordinate components along u(p).
ChartVector directional_derivative(const VectorField& u, const VectorField& v, const ChartPoint& p);

ChartVector lie_bracket(const VectorField& u, const VectorField& v, const ChartPoint& p);

/// Entrywise derivative of m along u(p).
Mat3<double> matrix_directional_derivative(const VectorField& u, const MatrixField& m,
                                           const ChartPoint& p);

}  // namespace subflag
