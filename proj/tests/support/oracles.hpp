#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's differentiation or linear algebra.

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using V3 = std::array<double, 3>;
using V4 = std::array<double, 4>;
using M3 = std::array<V3, 3>;

// Central difference with one Richardson step: (4 D(h/2) - D(h)) / 3.
template <typename F>
auto richardson(F f, double h = 1e-5) {
  auto central = [&](double s) {
    auto plus = f(s), minus = f(-s);
    for (std::size_t i = 0; i < plus.size(); ++i) plus[i] = (plus[i] - minus[i]) / (2 * s);
    return plus;
  };
  auto coarse = central(h), fine = central(h / 2);
  for (std::size_t i = 0; i < fine.size(); ++i) fine[i] = (4 * fine[i] - coarse[i]) / 3;
  return fine;
}

// d/dt g(p + t u) at t = 0 for a vector-valued g.
inline V3 fd_directional(const std::function<V3(const V3&)>& g, const V3& p, const V3& u, double h = 1e-5) {
  return richardson(
      [&](double t) {
        return g({p[0] + t * u[0], p[1] + t * u[1], p[2] + t * u[2]});
      },
      h);
}

inline M3 fd_matrix_directional(const std::function<M3(const V3&)>& g, const V3& p, const V3& u,
                                double h = 1e-5) {
  auto flat = [&](double t) {
    const M3 m = g({p[0] + t * u[0], p[1] + t * u[1], p[2] + t * u[2]});
    std::array<double, 9> out{};
    for (std::size_t i = 0; i < 9; ++i) out[i] = m[i / 3][i % 3];
    return out;
  };
  const auto d = richardson(flat, h);
  M3 out{};
  for (std::size_t i = 0; i < 9; ++i) out[i / 3][i % 3] = d[i];
  return out;
}

// Quaternion chart q(phi, theta, psi) on the unit sphere in H, components (x, y, z, t).
inline V4 su2_embedding(const V3& c) {
  const double phi = c[0], th = c[1], psi = c[2];
  return {std::cos(th) * std::cos(psi + phi), std::cos(th) * std::sin(psi + phi),
          std::sin(th) * std::cos(psi - phi), std::sin(th) * std::sin(psi - phi)};
}

// Coordinate columns d q / d(phi, theta, psi).
inline std::array<V4, 3> su2_coordinate_columns(const V3& c) {
  const double phi = c[0], th = c[1], psi = c[2];
  const double ct = std::cos(th), st = std::sin(th);
  const double cp = std::cos(psi + phi), sp = std::sin(psi + phi);
  const double cm = std::cos(psi - phi), sm = std::sin(psi - phi);
  return {{{-ct * sp, ct * cp, st * sm, -st * cm},
           {-st * cp, -st * sp, ct * cm, ct * sm},
           {-ct * sp, ct * cp, -st * sm, st * cm}}};
}

// Left multiplication by the unit quaternions for q = x + iy + jz + kt.
inline V4 i_times(const V4& q) { return {-q[1], q[0], -q[3], q[2]}; }
inline V4 j_times(const V4& q) { return {-q[2], q[3], q[0], -q[1]}; }
inline V4 k_times(const V4& q) { return {-q[3], -q[2], q[1], q[0]}; }

inline V4 push_forward(const V3& coeffs, const std::array<V4, 3>& cols) {
  V4 out{};
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t i = 0; i < 4; ++i) out[i] += coeffs[a] * cols[a][i];
  return out;
}

inline double dot4(const V4& a, const V4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

// SU(2) derivation coefficients in closed form; gamma[i][j] = (G^1_ij, G^2_ij), b[i][j] = b_ij.
struct Su2Coefficients {
  std::array<std::array<std::array<double, 2>, 2>, 2> gamma;
  std::array<std::array<double, 2>, 2> b;
};

inline Su2Coefficients su2_closed_forms(const V3& q) {
  const double cot = std::cos(2 * q[1]) / std::sin(2 * q[1]);
  const double c = std::cos(2 * q[2]), s = std::sin(2 * q[2]);
  Su2Coefficients r{};
  r.gamma[0][0] = {-2 * c * c * s * cot, 2 * c * cot * (1 + s * s)};
  r.gamma[0][1] = {-2 * cot * c * c * c, -2 * cot * s * s * s};
  r.gamma[1][0] = r.gamma[0][1];
  r.gamma[1][1] = {2 * cot * s * (1 + c * c), -2 * cot * s * s * c};
  r.b = {{{-2 * c * s, 2 * s * s}, {-2 * c * c, 2 * s * c}}};
  return r;
}

// Curvature images R(X,Y){X,Y,Z} in closed form, in double precision.
inline std::array<V3, 3> curvature_images(double chi, double kappa, double alpha, double beta) {
  return {{{0.0, (chi - kappa) / 4, -1.5 * alpha},
           {(chi + kappa) / 4, 0.0, -1.5 * beta},
           {-alpha / 2 * (chi + kappa), beta / 2 * (chi - kappa), 0.0}}};
}

// Row echelon rank with partial pivoting and an absolute pivot floor.
inline std::size_t gauss_rank(std::vector<V3> rows, double floor = 1e-12) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 3 && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (std::fabs(rows[r][col]) > std::fabs(rows[piv][col])) piv = r;
    if (std::fabs(rows[piv][col]) <= floor) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const double f = rows[r][col] / rows[rank][col];
      for (std::size_t k = 0; k < 3; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Reference draws, kept separate from the library sampler.
class Points {
 public:
  explicit Points(unsigned seed) : rng_(seed) {}
  V3 heisenberg() { return {u(-2, 2), u(-2, 2), u(-2, 2)}; }
  V3 su2() { return {u(0, 2 * M_PI), u(0.1, M_PI / 2 - 0.1), u(0, 2 * M_PI)}; }
  double u(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937 rng_;
};

}  // namespace oracle
