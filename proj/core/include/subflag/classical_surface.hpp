#pragma once

// Classical surface theory in Euclidean R^3: fundamental forms, Gaussian
// curvature, the derivation/Weingarten matrices A_1, A_2 of the moving frame
// {r_1, r_2, n}, the Codazzi residual, and Christoffel symbols of a 2D metric.
// Derivatives come from nested dual numbers over the parameter domain.

#include <array>
#include <functional>
#include <string>

#include "subflag/codazzi.hpp"
#include "subflag/dual.hpp"
#include "subflag/linalg.hpp"

namespace subflag {

using D3 = Dual<D2>;

template <typename T>
using Param2 = std::array<T, 2>;

using Mat2 = std::array<std::array<double, 2>, 2>;

/// |r_1 x r_2| below this is a degenerate surface point.
inline constexpr double kDegenerateNormal = 1e-10;

/// An immersion r: U subset R^2 -> R^3.
class ClassicalSurface {
 public:
  template <typename Rule>
  static ClassicalSurface make(std::string name, Rule rule) {
    ClassicalSurface s;
    s.name_ = std::move(name);
    s.rule0_ = [rule](const Param2<double>& u) { return rule(u); };
    s.rule1_ = [rule](const Param2<D1>& u) { return rule(u); };
    s.rule2_ = [rule](const Param2<D2>& u) { return rule(u); };
    s.rule3_ = [rule](const Param2<D3>& u) { return rule(u); };
    return s;
  }

  const std::string& name() const { return name_; }

  template <typename T>
  Vec3<T> at(const Param2<T>& u) const {
    if constexpr (std::is_same_v<T, double>) {
      return rule0_(u);
    } else if constexpr (std::is_same_v<T, D1>) {
      return rule1_(u);
    } else if constexpr (std::is_same_v<T, D2>) {
      return rule2_(u);
    } else {
      static_assert(std::is_same_v<T, D3>, "ClassicalSurface supports up to three dual levels");
      return rule3_(u);
    }
  }

 private:
  std::string name_;
  std::function<Vec3<double>(const Param2<double>&)> rule0_;
  std::function<Vec3<D1>(const Param2<D1>&)> rule1_;
  std::function<Vec3<D2>(const Param2<D2>&)> rule2_;
  std::function<Vec3<D3>(const Param2<D3>&)> rule3_;
};

/// r(u1, u2) = (sin u1 cos u2, sin u1 sin u2, cos u1); I = diag(1, sin^2 u1).
ClassicalSurface unit_sphere();
/// Standard torus with tube radius `tube` around a circle of radius `center`.
ClassicalSurface torus(double center, double tube);
/// r(u1, u2) = (u1, u2, 0).
ClassicalSurface plane();
/// r(u1, u2) = (radius cos u1, radius sin u1, u2).
ClassicalSurface cylinder(double radius);

struct SurfaceForms {
  Mat2 first;   ///< I = g_ij
  Mat2 second;  ///< II = b_ij
  double gaussian_curvature;
};

SurfaceForms surface_forms(const ClassicalSurface& surface, const Param2<double>& u);

/// A_1, A_2 of the frame {r_1, r_2, n}: d/du^i (r_1, r_2, n)^T = A_i (r_1, r_2, n)^T.
CodazziMatrices<double> surface_A_matrices(const ClassicalSurface& surface, const Param2<double>& u);

/// d_2 A_1 - d_1 A_2 + A_1 A_2 - A_2 A_1; vanishes for every genuine immersion.
Mat3<double> codazzi_residual(const ClassicalSurface& surface, const Param2<double>& u);

/// A 2x2 metric g_ij(u) on a parameter domain.
class MetricField {
 public:
  template <typename Rule>
  static MetricField make(Rule rule) {
    MetricField m;
    m.rule0_ = [rule](const Param2<double>& u) { return rule(u); };
    m.rule1_ = [rule](const Param2<D1>& u) { return rule(u); };
    return m;
  }

  static MetricField constant(const Mat2& g);

  template <typename T>
  std::array<std::array<T, 2>, 2> at(const Param2<T>& u) const {
    if constexpr (std::is_same_v<T, double>) {
      return rule0_(u);
    } else {
      static_assert(std::is_same_v<T, D1>, "MetricField supports double and D1 only");
      return rule1_(u);
    }
  }

 private:
  std::function<std::array<std::array<double, 2>, 2>(const Param2<double>&)> rule0_;
  std::function<std::array<std::array<D1, 2>, 2>(const Param2<D1>&)> rule1_;
};

/// gamma[k][i][j] = G^{k+1}_{i+1, j+1} = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij).
using Christoffel2 = std::array<std::array<std::array<double, 2>, 2>, 2>;

Christoffel2 christoffel_from_metric(const MetricField& metric, const Param2<double>& u);

}  // namespace subflag
