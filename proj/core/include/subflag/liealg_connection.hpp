#pragma once

// Left-invariant connection on a 3D Lie algebra with the bracket table
//
//   [X,Y] = Z, [Y,Z] = (chi+kappa) X, [X,Z] = (chi-kappa) Y
//
// defined by nabla_a b = 1/2 [a,b] + U(a,b) with the symmetric U-term
// U(X,Z) = alpha Z, U(Y,Z) = beta Z and all other basis values zero. This
// gives
//
//   nabla_X Y =  1/2 Z                      nabla_Y X = -1/2 Z
//   nabla_X Z =  (chi-kappa)/2 Y + alpha Z  nabla_Z X =  (kappa-chi)/2 Y + alpha Z
//   nabla_Y Z =  (chi+kappa)/2 X + beta Z   nabla_Z Y = -(kappa+chi)/2 X + beta Z
//   nabla_X X = nabla_Y Y = nabla_Z Z = 0
//
// Every routine is generic over the scalar: Rational gives exact identities,
// double is the floating path. The two are never mixed inside one call.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subflag/algebra.hpp"
#include "subflag/errors.hpp"
#include "subflag/linalg.hpp"
#include "subflag/model_groups.hpp"

namespace subflag {

/// Symmetric bilinear U over the basis; u[a][b] = U(e_a, e_b).
template <typename S>
using UTerm = BasisTable<S>;

template <typename S>
struct ConnectionParameters {
  S chi{0};
  S kappa{0};
  S alpha{0};
  S beta{0};
};

template <typename S>
struct ConnectionTable {
  ConnectionParameters<S> params;
  StructureConstants<S> structure;
  /// table[a][b] = nabla_{e_a} e_b
  BasisTable<S> table;

  const AlgebraElement<S>& operator()(Basis a, Basis b) const {
    return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
};

/// U(X,Z) = U(Z,X) = alpha Z, U(Y,Z) = U(Z,Y) = beta Z, zero elsewhere.
template <typename S>
UTerm<S> prescribed_u_term(const S& alpha, const S& beta) {
  using E = AlgebraElement<S>;
  UTerm<S> u;
  u[0][2] = u[2][0] = alpha * E::Z();
  u[1][2] = u[2][1] = beta * E::Z();
  return u;
}

/// The six off-diagonal table entries plus the zero diagonal.
template <typename S>
ConnectionTable<S> make_connection(const S& chi, const S& kappa, const S& alpha, const S& beta) {
  using E = AlgebraElement<S>;
  const S half = S(1) / S(2);
  ConnectionTable<S> ct;
  ct.params = {chi, kappa, alpha, beta};
  ct.structure = general_structure(chi, kappa);
  auto& t = ct.table;
  t[0][1] = half * E::Z();
  t[1][0] = -(half * E::Z());
  t[0][2] = ((chi - kappa) * half) * E::Y() + alpha * E::Z();
  t[2][0] = ((kappa - chi) * half) * E::Y() + alpha * E::Z();
  t[1][2] = ((chi + kappa) * half) * E::X() + beta * E::Z();
  t[2][1] = (-(kappa + chi) * half) * E::X() + beta * E::Z();
  return ct;
}

/// nabla_a b = 1/2 [a,b] + U(a,b) on basis pairs.
template <typename S>
ConnectionTable<S> connection_from_u_term(const StructureConstants<S>& sc, const UTerm<S>& u,
                                          const ConnectionParameters<S>& params = {}) {
  const S half = S(1) / S(2);
  ConnectionTable<S> ct;
  ct.params = params;
  ct.structure = sc;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) ct.table[a][b] = half * sc.table[a][b] + u[a][b];
  return ct;
}

/// Bilinear extension over constant coefficients.
template <typename S>
AlgebraElement<S> nabla(const ConnectionTable<S>& ct, const AlgebraElement<S>& a,
                        const AlgebraElement<S>& b) {
  AlgebraElement<S> out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i] == S(0)) continue;
    for (std::size_t j = 0; j < 3; ++j) {
      if (b[j] == S(0)) continue;
      out = out + (a[i] * b[j]) * ct.table[i][j];
    }
  }
  return out;
}

/// T(a,b) = nabla_a b - nabla_b a - [a,b]
template <typename S>
AlgebraElement<S> torsion(const ConnectionTable<S>& ct, const AlgebraElement<S>& a,
                          const AlgebraElement<S>& b) {
  return nabla(ct, a, b) - nabla(ct, b, a) - bracket(ct.structure, a, b);
}

/// Horizontal scalar product: X, Y orthonormal and <Z, .>_0 = 0.
template <typename S>
S horizontal_inner(const AlgebraElement<S>& u, const AlgebraElement<S>& v) {
  return u[0] * v[0] + u[1] * v[1];
}

/// <nabla_a b, c>_0 + <b, nabla_a c>_0 for horizontal a, b, c.
template <typename S>
S metric_parallel_defect(const ConnectionTable<S>& ct, const AlgebraElement<S>& a,
                         const AlgebraElement<S>& b, const AlgebraElement<S>& c) {
  if (!a.is_horizontal() || !b.is_horizontal() || !c.is_horizontal())
    throw NonHorizontalError("metric parallelism is defined for horizontal arguments only");
  return horizontal_inner(nabla(ct, a, b), c) + horizontal_inner(b, nabla(ct, a, c));
}

/// R(a,b)c = nabla_a nabla_b c - nabla_b nabla_a c - nabla_[a,b] c
template <typename S>
AlgebraElement<S> curvature(const ConnectionTable<S>& ct, const AlgebraElement<S>& a,
                            const AlgebraElement<S>& b, const AlgebraElement<S>& c) {
  return nabla(ct, a, nabla(ct, b, c)) - nabla(ct, b, nabla(ct, a, c)) -
         nabla(ct, bracket(ct.structure, a, b), c);
}

// ---------------------------------------------------------------------------
// metrics on the whole algebra

/// Symmetric Gram matrix over {X, Y, Z} whose top-left block is the identity,
/// i.e. it projects to the horizontal metric. Free entries: <X,Z>, <Y,Z>, <Z,Z>.
template <typename S>
struct CandidateMetric {
  Mat3<S> gram;

  static CandidateMetric make(const S& xz, const S& yz, const S& zz) {
    return {{{{S(1), S(0), xz}, {S(0), S(1), yz}, {xz, yz, zz}}}};
  }
  static CandidateMetric identity() { return make(S(0), S(0), S(1)); }

  const S& xz() const { return gram[0][2]; }
  const S& yz() const { return gram[1][2]; }
  const S& zz() const { return gram[2][2]; }

  S inner(const AlgebraElement<S>& u, const AlgebraElement<S>& v) const {
    return dot(u.coeffs, matvec(gram, v.coeffs));
  }
};

/// Right-hand side of 2<U(a,b), e_c> = <[e_c,a],b> + <a,[e_c,b]> for c = X, Y, Z.
template <typename S>
Vec3<S> u_term_rhs(const CandidateMetric<S>& m, const StructureConstants<S>& sc,
                   const AlgebraElement<S>& a, const AlgebraElement<S>& b) {
  Vec3<S> rhs;
  for (std::size_t c = 0; c < 3; ++c) {
    const auto e = AlgebraElement<S>::basis(static_cast<Basis>(c));
    rhs[c] = m.inner(bracket(sc, e, a), b) + m.inner(a, bracket(sc, e, b));
  }
  return rhs;
}

/// The unique U(a,b) the metric generates; throws SingularMatrixError for a
/// degenerate Gram matrix.
template <typename S>
AlgebraElement<S> u_term_from_metric(const CandidateMetric<S>& m, const StructureConstants<S>& sc,
                                     const AlgebraElement<S>& a, const AlgebraElement<S>& b) {
  Vec3<S> rhs = u_term_rhs(m, sc, a, b);
  for (auto& r : rhs) r = r / S(2);
  // G symmetric: <U, e_c> = sum_k u_k G[k][c] = (G u)_c
  return {solve3(m.gram, rhs)};
}

/// Per-slot defect of the prescribed U(a,b) against a metric:
/// 1/2 (rhs)_c - <U_prescribed(a,b), e_c>. Zero in every slot iff the metric
/// generates that value of U. Needs no inverse, so any Gram matrix is allowed.
template <typename S>
Vec3<S> u_consistency_residual(const CandidateMetric<S>& m, const StructureConstants<S>& sc,
                               const UTerm<S>& prescribed, Basis a, Basis b) {
  const auto ea = AlgebraElement<S>::basis(a);
  const auto eb = AlgebraElement<S>::basis(b);
  const Vec3<S> rhs = u_term_rhs(m, sc, ea, eb);
  const auto& u = prescribed[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  Vec3<S> out;
  for (std::size_t c = 0; c < 3; ++c) {
    const auto ec = AlgebraElement<S>::basis(static_cast<Basis>(c));
    out[c] = rhs[c] / S(2) - m.inner(u, ec);
  }
  return out;
}

template <typename S>
struct ObstructionSample {
  CandidateMetric<S> metric;
  Vec3<S> u_xy_residual;      ///< slots X, Y, Z of the U(X,Y) equations
  bool matches_all_pairs;     ///< U(X,Y), U(X,Z), U(Y,Z) all reproduced
};

template <typename S>
struct ObstructionReport {
  ConnectionParameters<S> params;
  /// Z-slot of the U(X,Y) residual, identical for every candidate: -chi.
  S u_xy_z_slot{0};
  /// The Z-slot value agreed across every sampled candidate.
  bool z_slot_metric_independent = true;
  /// Some candidate (the identity-block one with <X,Z> = <Y,Z> = 0) makes
  /// the U(X,Y) residual vanish; happens exactly when chi = 0.
  bool u_xy_admits_metric = false;
  std::vector<ObstructionSample<S>> samples;
};

template <typename S>
bool is_zero_vec(const Vec3<S>& v) {
  return v[0] == S(0) && v[1] == S(0) && v[2] == S(0);
}

/// Sweeps CandidateMetric::make(p, q, s) for p, q, s drawn from `grid` and
/// measures how far each is from generating the prescribed U-term.
template <typename S>
ObstructionReport<S> metric_obstruction(const S& chi, const S& kappa, const S& alpha, const S& beta,
                                        std::span<const S> grid) {
  ObstructionReport<S> report;
  report.params = {chi, kappa, alpha, beta};
  const auto sc = general_structure(chi, kappa);
  const auto u = prescribed_u_term(alpha, beta);

  auto sample = [&](const CandidateMetric<S>& m) {
    ObstructionSample<S> s{m, u_consistency_residual(m, sc, u, Basis::X, Basis::Y), false};
    s.matches_all_pairs = is_zero_vec(s.u_xy_residual) &&
                          is_zero_vec(u_consistency_residual(m, sc, u, Basis::X, Basis::Z)) &&
                          is_zero_vec(u_consistency_residual(m, sc, u, Basis::Y, Basis::Z));
    return s;
  };

  const auto base = sample(CandidateMetric<S>::identity());
  report.u_xy_z_slot = base.u_xy_residual[2];
  report.u_xy_admits_metric = is_zero_vec(base.u_xy_residual);
  for (const S& p : grid)
    for (const S& q : grid)
      for (const S& z : grid) {
        auto s = sample(CandidateMetric<S>::make(p, q, z));
        if (s.u_xy_residual[2] != report.u_xy_z_slot) report.z_slot_metric_independent = false;
        report.samples.push_back(std::move(s));
      }
  return report;
}

}  // namespace subflag
