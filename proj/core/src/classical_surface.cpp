#include "subflag/classical_surface.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace subflag {

ClassicalSurface unit_sphere() {
  return ClassicalSurface::make("sphere", [](const auto& u) {
    using T = typename std::decay_t<decltype(u)>::value_type;
    return Vec3<T>{sin(u[0]) * cos(u[1]), sin(u[0]) * sin(u[1]), cos(u[0])};
  });
}

ClassicalSurface torus(double center, double tube) {
  return ClassicalSurface::make("torus", [center, tube](const auto& u) {
    using T = typename std::decay_t<decltype(u)>::value_type;
    const T ring = center + tube * cos(u[0]);
    return Vec3<T>{ring * cos(u[1]), ring * sin(u[1]), tube * sin(u[0])};
  });
}

ClassicalSurface plane() {
  return ClassicalSurface::make("plane", [](const auto& u) {
    using T = typename std::decay_t<decltype(u)>::value_type;
    return Vec3<T>{u[0], u[1], T(0.0)};
  });
}

ClassicalSurface cylinder(double radius) {
  return ClassicalSurface::make("cylinder", [radius](const auto& u) {
    using T = typename std::decay_t<decltype(u)>::value_type;
    return Vec3<T>{radius * cos(u[0]), radius * sin(u[0]), u[1]};
  });
}

namespace {

template <typename T>
struct LocalFrame {
  std::array<Vec3<T>, 2> r;                   // r_1, r_2
  std::array<std::array<Vec3<T>, 2>, 2> rr;   // r_ij
  Vec3<T> n;
  std::array<std::array<T, 2>, 2> g;
  std::array<std::array<T, 2>, 2> g_inv;
};

template <typename T>
LocalFrame<T> local_frame(const ClassicalSurface& surface, const Param2<T>& u) {
  using Inner = Dual<T>;
  using Outer = Dual<Inner>;
  LocalFrame<T> f;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = i; j < 2; ++j) {
      Param2<Outer> lifted;
      for (std::size_t k = 0; k < 2; ++k)
        lifted[k] = Outer{Inner{u[k], T(k == j ? 1.0 : 0.0)}, Inner{T(k == i ? 1.0 : 0.0), T(0.0)}};
      const Vec3<Outer> out = surface.at(lifted);
      Vec3<T> second;
      for (std::size_t c = 0; c < 3; ++c) {
        second[c] = out[c].eps.eps;
        f.r[i][c] = out[c].eps.value;
        f.r[j][c] = out[c].value.eps;
      }
      f.rr[i][j] = second;
      f.rr[j][i] = second;
    }
  }
  const Vec3<T> normal = cross(f.r[0], f.r[1]);
  const T length = sqrt(dot(normal, normal));
  if (!(magnitude(length) >= kDegenerateNormal))
    throw DegenerateSurfaceError("r_1 x r_2 vanishes on surface " + surface.name());
  f.n = scale(T(1.0) / length, normal);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) f.g[i][j] = dot(f.r[i], f.r[j]);
  const T det = f.g[0][0] * f.g[1][1] - f.g[0][1] * f.g[1][0];
  f.g_inv = {{{f.g[1][1] / det, -(f.g[0][1] / det)}, {-(f.g[1][0] / det), f.g[0][0] / det}}};
  return f;
}

template <typename T>
CodazziMatrices<T> surface_A_at(const ClassicalSurface& surface, const Param2<T>& u) {
  const LocalFrame<T> f = local_frame(surface, u);
  const Mat3<T> basis = from_columns(f.r[0], f.r[1], f.n);
  CodazziMatrices<T> m;
  for (std::size_t i = 0; i < 2; ++i) {
    Mat3<T>& a = i == 0 ? m.A1 : m.A2;
    std::array<T, 2> b_row;
    for (std::size_t j = 0; j < 2; ++j) {
      a[j] = solve3(basis, f.rr[i][j]);
      b_row[j] = dot(f.rr[i][j], f.n);
    }
    for (std::size_t k = 0; k < 2; ++k)
      a[2][k] = -(b_row[0] * f.g_inv[0][k] + b_row[1] * f.g_inv[1][k]);
    a[2][2] = T(0.0);
  }
  return m;
}

template <typename T>
std::array<std::array<T, 2>, 2> inverse2(const std::array<std::array<T, 2>, 2>& g) {
  const T det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  if (!(magnitude(det) > 1e-14 * std::max({magnitude(g[0][0]), magnitude(g[1][1]), 1.0})))
    throw SingularMatrixError("metric is singular");
  return {{{g[1][1] / det, -(g[0][1] / det)}, {-(g[1][0] / det), g[0][0] / det}}};
}

}  // namespace

SurfaceForms surface_forms(const ClassicalSurface& surface, const Param2<double>& u) {
  const LocalFrame<double> f = local_frame(surface, u);
  SurfaceForms forms{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      forms.first[i][j] = f.g[i][j];
      forms.second[i][j] = dot(f.rr[i][j], f.n);
    }
  const double det_i = forms.first[0][0] * forms.first[1][1] - forms.first[0][1] * forms.first[1][0];
  const double det_ii =
      forms.second[0][0] * forms.second[1][1] - forms.second[0][1] * forms.second[1][0];
  forms.gaussian_curvature = det_ii / det_i;
  return forms;
}

CodazziMatrices<double> surface_A_matrices(const ClassicalSurface& surface, const Param2<double>& u) {
  return surface_A_at(surface, u);
}

Mat3<double> codazzi_residual(const ClassicalSurface& surface, const Param2<double>& u) {
  const CodazziMatrices<double> a = surface_A_at(surface, u);
  auto derivative = [&](std::size_t direction, bool first) {
    Param2<D1> lifted{D1{u[0], direction == 0 ? 1.0 : 0.0}, D1{u[1], direction == 1 ? 1.0 : 0.0}};
    const CodazziMatrices<D1> m = surface_A_at(surface, lifted);
    const Mat3<D1>& src = first ? m.A1 : m.A2;
    Mat3<double> d;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) d[i][j] = src[i][j].eps;
    return d;
  };
  return derivative(1, true) - derivative(0, false) + commutator(a.A1, a.A2);
}

MetricField MetricField::constant(const Mat2& g) {
  return make([g](const auto& u) {
    using T = typename std::decay_t<decltype(u)>::value_type;
    return std::array<std::array<T, 2>, 2>{
        {{T(g[0][0]), T(g[0][1])}, {T(g[1][0]), T(g[1][1])}}};
  });
}

Christoffel2 christoffel_from_metric(const MetricField& metric, const Param2<double>& u) {
  const auto g = metric.at(u);
  const auto g_inv = inverse2(g);
  // dg[l][i][j] = d_l g_ij
  std::array<std::array<std::array<double, 2>, 2>, 2> dg{};
  for (std::size_t l = 0; l < 2; ++l) {
    const Param2<D1> lifted{D1{u[0], l == 0 ? 1.0 : 0.0}, D1{u[1], l == 1 ? 1.0 : 0.0}};
    const auto gl = metric.at(lifted);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) dg[l][i][j] = gl[i][j].eps;
  }
  Christoffel2 gamma{};
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        double acc = 0.0;
        for (std::size_t l = 0; l < 2; ++l)
          acc += g_inv[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
        gamma[k][i][j] = 0.5 * acc;
      }
  return gamma;
}

}  // namespace subflag
