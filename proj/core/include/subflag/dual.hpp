#pragma once

// Forward-mode dual numbers.
//
// A Dual<T> carries a value and one tangent component: x + x' e with e^2 = 0.
// Nesting (Dual<Dual<double>>) gives exact higher derivatives along chosen
// directions, which is how the frame and surface code differentiates
// quantities that already contain a first derivative.

#include <cmath>
#include <type_traits>

namespace subflag {

template <typename T>
struct Dual {
  T value{};
  T eps{};

  constexpr Dual() = default;
  constexpr Dual(double v) : value(v), eps(0.0) {}  // NOLINT: implicit lift of constants
  constexpr Dual(T v, T e) : value(std::move(v)), eps(std::move(e)) {}

  template <typename U = T>
    requires(!std::is_same_v<U, double>)
  constexpr Dual(const U& v) : value(v), eps(0.0) {}  // NOLINT
};

template <typename T>
struct is_dual : std::false_type {};
template <typename T>
struct is_dual<Dual<T>> : std::true_type {};
template <typename T>
inline constexpr bool is_dual_v = is_dual<T>::value;

/// Innermost real value of a possibly nested dual.
inline double primal(double x) { return x; }
template <typename T>
double primal(const Dual<T>& x) {
  return primal(x.value);
}

/// Lift a real to a dual variable with tangent `seed`.
template <typename T>
constexpr Dual<T> make_variable(const T& value, const T& seed) {
  return Dual<T>{value, seed};
}

// ---------------------------------------------------------------------------
// arithmetic

template <typename T>
constexpr Dual<T> operator+(const Dual<T>& a) {
  return a;
}
template <typename T>
constexpr Dual<T> operator-(const Dual<T>& a) {
  return {-a.value, -a.eps};
}

template <typename T>
constexpr Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) {
  return {a.value + b.value, a.eps + b.eps};
}
template <typename T>
constexpr Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) {
  return {a.value - b.value, a.eps - b.eps};
}
template <typename T>
constexpr Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
  return {a.value * b.value, a.eps * b.value + a.value * b.eps};
}
template <typename T>
constexpr Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
  const T inv = T(1.0) / b.value;
  return {a.value * inv, (a.eps - a.value * inv * b.eps) * inv};
}

template <typename T>
constexpr Dual<T> operator+(const Dual<T>& a, double b) {
  return {a.value + b, a.eps};
}
template <typename T>
constexpr Dual<T> operator+(double a, const Dual<T>& b) {
  return {a + b.value, b.eps};
}
template <typename T>
constexpr Dual<T> operator-(const Dual<T>& a, double b) {
  return {a.value - b, a.eps};
}
template <typename T>
constexpr Dual<T> operator-(double a, const Dual<T>& b) {
  return {a - b.value, -b.eps};
}
template <typename T>
constexpr Dual<T> operator*(const Dual<T>& a, double b) {
  return {a.value * b, a.eps * b};
}
template <typename T>
constexpr Dual<T> operator*(double a, const Dual<T>& b) {
  return {a * b.value, a * b.eps};
}
template <typename T>
constexpr Dual<T> operator/(const Dual<T>& a, double b) {
  return {a.value / b, a.eps / b};
}
template <typename T>
constexpr Dual<T> operator/(double a, const Dual<T>& b) {
  return Dual<T>(a) / b;
}

template <typename T>
constexpr Dual<T>& operator+=(Dual<T>& a, const Dual<T>& b) {
  a = a + b;
  return a;
}
template <typename T>
constexpr Dual<T>& operator-=(Dual<T>& a, const Dual<T>& b) {
  a = a - b;
  return a;
}
template <typename T>
constexpr Dual<T>& operator*=(Dual<T>& a, const Dual<T>& b) {
  a = a * b;
  return a;
}
template <typename T>
constexpr Dual<T>& operator/=(Dual<T>& a, const Dual<T>& b) {
  a = a / b;
  return a;
}

// Comparisons look only at the primal value; they exist for pivoting and
// domain checks, never for derivative logic.
template <typename T>
bool operator<(const Dual<T>& a, const Dual<T>& b) {
  return primal(a) < primal(b);
}
template <typename T>
bool operator>(const Dual<T>& a, const Dual<T>& b) {
  return primal(a) > primal(b);
}

// ---------------------------------------------------------------------------
// elementary functions

using std::cos;
using std::sin;
using std::sqrt;

template <typename T>
Dual<T> sin(const Dual<T>& a) {
  return {sin(a.value), a.eps * cos(a.value)};
}
template <typename T>
Dual<T> cos(const Dual<T>& a) {
  return {cos(a.value), -(a.eps * sin(a.value))};
}
template <typename T>
Dual<T> sqrt(const Dual<T>& a) {
  const T root = sqrt(a.value);
  return {root, a.eps / (2.0 * root)};
}
template <typename T>
Dual<T> abs(const Dual<T>& a) {
  return primal(a) < 0.0 ? -a : a;
}

}  // namespace subflag
