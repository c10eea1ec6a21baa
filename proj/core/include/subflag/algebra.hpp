#pragma once

// Elements of a 3-dimensional Lie algebra with ordered basis {X, Y, Z} and
// bracket tables over it. Scalars are Rational (exact) or double.

#include <array>
#include <cstddef>
#include <string>

#include "subflag/linalg.hpp"
#include "subflag/scalar.hpp"

namespace subflag {

enum class Basis : std::size_t { X = 0, Y = 1, Z = 2 };

template <typename S>
struct AlgebraElement {
  std::array<S, 3> coeffs{S(0), S(0), S(0)};

  static AlgebraElement basis(Basis b) {
    AlgebraElement e;
    e.coeffs[static_cast<std::size_t>(b)] = S(1);
    return e;
  }
  static AlgebraElement X() { return basis(Basis::X); }
  static AlgebraElement Y() { return basis(Basis::Y); }
  static AlgebraElement Z() { return basis(Basis::Z); }
  static AlgebraElement of(S x, S y, S z) { return {{std::move(x), std::move(y), std::move(z)}}; }

  const S& operator[](std::size_t i) const { return coeffs[i]; }
  S& operator[](std::size_t i) { return coeffs[i]; }
  const S& operator[](Basis b) const { return coeffs[static_cast<std::size_t>(b)]; }

  bool is_zero() const { return coeffs[0] == S(0) && coeffs[1] == S(0) && coeffs[2] == S(0); }
  /// In span{X, Y}.
  bool is_horizontal() const { return coeffs[2] == S(0); }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    return of(a[0] + b[0], a[1] + b[1], a[2] + b[2]);
  }
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    return of(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
  }
  friend AlgebraElement operator-(const AlgebraElement& a) { return of(-a[0], -a[1], -a[2]); }
  friend AlgebraElement operator*(const S& s, const AlgebraElement& a) {
    return of(s * a[0], s * a[1], s * a[2]);
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.coeffs == b.coeffs;
  }
};

template <typename S>
using BasisTable = std::array<std::array<AlgebraElement<S>, 3>, 3>;

/// Bracket table over {X, Y, Z}; antisymmetric by construction.
template <typename S>
struct StructureConstants {
  std::string label;
  BasisTable<S> table;

  /// Table determined by [X,Y], [Y,Z] and [X,Z]; the rest follows by antisymmetry.
  static StructureConstants from_brackets(std::string label, const AlgebraElement<S>& xy,
                                          const AlgebraElement<S>& yz,
                                          const AlgebraElement<S>& xz) {
    StructureConstants sc;
    sc.label = std::move(label);
    sc.table[0][1] = xy;
    sc.table[1][0] = -xy;
    sc.table[1][2] = yz;
    sc.table[2][1] = -yz;
    sc.table[0][2] = xz;
    sc.table[2][0] = -xz;
    return sc;
  }

  const AlgebraElement<S>& operator()(Basis a, Basis b) const {
    return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
};

/// Bilinear extension of the table.
template <typename S>
AlgebraElement<S> bracket(const StructureConstants<S>& sc, const AlgebraElement<S>& a,
                          const AlgebraElement<S>& b) {
  AlgebraElement<S> out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i] == S(0)) continue;
    for (std::size_t j = 0; j < 3; ++j) {
      if (b[j] == S(0)) continue;
      out = out + (a[i] * b[j]) * sc.table[i][j];
    }
  }
  return out;
}

/// [a,[b,c]] + [b,[c,a]] + [c,[a,b]]
template <typename S>
AlgebraElement<S> jacobi_residual(const StructureConstants<S>& sc, const AlgebraElement<S>& a,
                                  const AlgebraElement<S>& b, const AlgebraElement<S>& c) {
  return bracket(sc, a, bracket(sc, b, c)) + bracket(sc, b, bracket(sc, c, a)) +
         bracket(sc, c, bracket(sc, a, b));
}

template <typename S>
AlgebraElement<double> to_double(const AlgebraElement<S>& a) {
  return AlgebraElement<double>::of(to_double(a[0]), to_double(a[1]), to_double(a[2]));
}

template <typename S>
Vec3<S> as_vec3(const AlgebraElement<S>& a) {
  return a.coeffs;
}

}  // namespace subflag
