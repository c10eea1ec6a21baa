#pragma once

// Derivation and Weingarten equations of a frame {X, Y, Z}, the matrices
// A_1, A_2 they assemble into, and the Codazzi curvature
//
//   R = D_Y A_1 - D_X A_2 + A_1 A_2 - A_2 A_1.
//
// In standard mode D is the componentwise derivative delta along a frame
// field; in lie mode the frame derivatives are Lie brackets. For an abstract
// bracket table the A-matrices are constant and R reduces to [A_1, A_2].
//
// Row layout of A_i (e_1 = X, e_2 = Y):
//   row 0: coefficients of D_{e_i} X in (X, Y, Z)  = (G^1_{i1}, G^2_{i1}, b_{i1})
//   row 1: coefficients of D_{e_i} Y               = (G^1_{i2}, G^2_{i2}, b_{i2})
//   row 2: coefficients of D_{e_i} Z               (Weingarten row)

#include <array>
#include <optional>
#include <string_view>

#include "subflag/algebra.hpp"
#include "subflag/chart_fields.hpp"
#include "subflag/model_groups.hpp"

namespace subflag {

enum class DerivativeMode { standard, lie };

std::string_view mode_name(DerivativeMode mode);
DerivativeMode parse_derivative_mode(std::string_view name);

template <typename S>
struct FrameDecomposition {
  /// gamma[i][j][k] is G^{k+1}_{i+1, j+1}.
  std::array<std::array<std::array<S, 2>, 2>, 2> gamma{};
  /// b[i][j] is b_{i+1, j+1}.
  std::array<std::array<S, 2>, 2> b{};
  /// weingarten[i]: coefficients of D_{e_i} Z in (X, Y, Z).
  std::array<Vec3<S>, 2> weingarten{};
  DerivativeMode mode = DerivativeMode::standard;
  std::optional<ChartPoint> point;
};

template <typename S>
struct CodazziMatrices {
  Mat3<S> A1;
  Mat3<S> A2;
  DerivativeMode mode = DerivativeMode::standard;
};

/// Coefficients (a, b, c) with v = aX + bY + cZ at p.
Vec3<double> decompose_in_frame(const ChartVector& v, const ModelFrame& frame, const ChartPoint& p);

/// Frame rows D_{e_i} e_j (i in {X, Y}, j in {X, Y, Z}) decomposed in the frame.
/// Works over double and Dual<double> coordinates.
template <typename T>
std::array<std::array<Vec3<T>, 3>, 2> frame_derivative_rows(const ModelFrame& frame,
                                                             const Vec3<T>& coords,
                                                             DerivativeMode mode) {
  const Mat3<T> basis = from_columns(frame.X.at(coords), frame.Y.at(coords), frame.Z.at(coords));
  std::array<std::array<Vec3<T>, 3>, 2> rows;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (mode == DerivativeMode::lie && i == j) {
        rows[i][j] = zero_vec3<T>();
        continue;
      }
      const Vec3<T> d = mode == DerivativeMode::standard
                            ? standard_derivative(frame[i], frame[j], coords)
                            : bracket_at(frame[i], frame[j], coords);
      rows[i][j] = solve3(basis, d);
    }
  }
  return rows;
}

template <typename T>
CodazziMatrices<T> codazzi_matrices_at(const ModelFrame& frame, const Vec3<T>& coords,
                                       DerivativeMode mode) {
  const auto rows = frame_derivative_rows(frame, coords, mode);
  return {{rows[0][0], rows[0][1], rows[0][2]}, {rows[1][0], rows[1][1], rows[1][2]}, mode};
}

FrameDecomposition<double> derivation_equations(const ModelFrame& frame, const ChartPoint& p,
                                                DerivativeMode mode);

/// Lie-mode decomposition of an abstract bracket table: L_{e_i} e_j = [e_i, e_j].
template <typename S>
FrameDecomposition<S> derivation_equations(const StructureConstants<S>& sc) {
  FrameDecomposition<S> dec;
  dec.mode = DerivativeMode::lie;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const auto& e = sc.table[i][j];
      dec.gamma[i][j] = {e[0], e[1]};
      dec.b[i][j] = e[2];
    }
    dec.weingarten[i] = sc.table[i][2].coeffs;
  }
  return dec;
}

template <typename S>
CodazziMatrices<S> assemble_A_matrices(const FrameDecomposition<S>& dec) {
  CodazziMatrices<S> m;
  m.mode = dec.mode;
  for (std::size_t i = 0; i < 2; ++i) {
    Mat3<S>& a = i == 0 ? m.A1 : m.A2;
    for (std::size_t j = 0; j < 2; ++j) a[j] = {dec.gamma[i][j][0], dec.gamma[i][j][1], dec.b[i][j]};
    a[2] = dec.weingarten[i];
  }
  return m;
}

/// A_1 (which = 0) or A_2 (which = 1) as a field on the frame's chart.
MatrixField codazzi_matrix_field(const ModelFrame& frame, int which, DerivativeMode mode);

/// R at p for a concrete frame.
Mat3<double> codazzi_curvature(const ModelFrame& frame, const ChartPoint& p, DerivativeMode mode);

/// R for an abstract bracket table (lie mode; the derivative terms vanish).
template <typename S>
Mat3<S> codazzi_curvature(const StructureConstants<S>& sc) {
  const auto m = assemble_A_matrices(derivation_equations(sc));
  return commutator(m.A1, m.A2);
}

}  // namespace subflag
