#pragma once

// Fixed-size 3-vectors and 3x3 matrices over a generic scalar (double,
// Dual<...>, Rational). Everything here is tiny and dense, so plain arrays
// beat a general matrix library, and the same code serves every scalar type.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

#include "subflag/errors.hpp"
#include "subflag/scalar.hpp"

namespace subflag {

template <typename T>
using Vec3 = std::array<T, 3>;

template <typename T>
using Mat3 = std::array<std::array<T, 3>, 3>;

template <typename T>
Vec3<T> zero_vec3() {
  return {T(0.0), T(0.0), T(0.0)};
}

template <typename T>
Mat3<T> zero_mat3() {
  Mat3<T> m;
  for (auto& row : m) row = zero_vec3<T>();
  return m;
}

template <typename T>
Mat3<T> identity_mat3() {
  Mat3<T> m = zero_mat3<T>();
  for (std::size_t i = 0; i < 3; ++i) m[i][i] = T(1.0);
  return m;
}

template <typename T>
Vec3<T> operator+(const Vec3<T>& a, const Vec3<T>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

template <typename T>
Vec3<T> operator-(const Vec3<T>& a, const Vec3<T>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

template <typename T>
Vec3<T> scale(const T& s, const Vec3<T>& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

template <typename T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <typename T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <typename T>
Vec3<T> matvec(const Mat3<T>& m, const Vec3<T>& v) {
  return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

template <typename T>
Mat3<T> matmul(const Mat3<T>& a, const Mat3<T>& b) {
  Mat3<T> c = zero_mat3<T>();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) c[i][j] = c[i][j] + a[i][k] * b[k][j];
  return c;
}

template <typename T>
Mat3<T> operator+(const Mat3<T>& a, const Mat3<T>& b) {
  Mat3<T> c;
  for (std::size_t i = 0; i < 3; ++i) c[i] = a[i] + b[i];
  return c;
}

template <typename T>
Mat3<T> operator-(const Mat3<T>& a, const Mat3<T>& b) {
  Mat3<T> c;
  for (std::size_t i = 0; i < 3; ++i) c[i] = a[i] - b[i];
  return c;
}

template <typename T>
Mat3<T> transpose(const Mat3<T>& a) {
  Mat3<T> t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

/// a b - b a
template <typename T>
Mat3<T> commutator(const Mat3<T>& a, const Mat3<T>& b) {
  return matmul(a, b) - matmul(b, a);
}

/// Matrix whose columns are the given vectors.
template <typename T>
Mat3<T> from_columns(const Vec3<T>& c0, const Vec3<T>& c1, const Vec3<T>& c2) {
  return {{{c0[0], c1[0], c2[0]}, {c0[1], c1[1], c2[1]}, {c0[2], c1[2], c2[2]}}};
}

template <typename T>
T det3(const Mat3<T>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline double max_abs(const Mat3<double>& m) {
  double r = 0.0;
  for (const auto& row : m)
    for (double x : row) r = std::max(r, std::fabs(x));
  return r;
}

inline double max_abs(const Vec3<double>& v) {
  return std::max({std::fabs(v[0]), std::fabs(v[1]), std::fabs(v[2])});
}

/// Solves m x = b by Gaussian elimination with partial pivoting on the
/// primal magnitude. Exact for Rational; for floating scalars a pivot below
/// `rel_tol` times the largest entry of its column block counts as singular.
template <typename T>
Vec3<T> solve3(Mat3<T> m, Vec3<T> b, double rel_tol = 1e-13) {
  double scale_ref = 0.0;
  for (const auto& row : m)
    for (const auto& x : row) scale_ref = std::max(scale_ref, magnitude(x));

  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < 3; ++r)
      if (magnitude(m[r][col]) > magnitude(m[piv][col])) piv = r;
    bool singular = false;
    if constexpr (is_exact_v<T>) {
      singular = is_zero(m[piv][col]);
    } else {
      singular = !(magnitude(m[piv][col]) > rel_tol * scale_ref);
    }
    if (singular) throw SingularMatrixError("singular 3x3 system");
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < 3; ++r) {
      const T f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < 3; ++c) m[r][c] = m[r][c] - f * m[col][c];
      b[r] = b[r] - f * b[col];
    }
  }
  Vec3<T> x = zero_vec3<T>();
  for (std::size_t i = 3; i-- > 0;) {
    T acc = b[i];
    for (std::size_t c = i + 1; c < 3; ++c) acc = acc - m[i][c] * x[c];
    x[i] = acc / m[i][i];
  }
  return x;
}

}  // namespace subflag
