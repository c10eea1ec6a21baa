#include <gtest/gtest.h>

#include "subflag/liealg_connection.hpp"
#include "subflag/sampling.hpp"

using namespace subflag;

namespace {

using E = AlgebraElement<Rational>;
using R = Rational;

const std::array<E, 3> kBasis{E::X(), E::Y(), E::Z()};

ConnectionTable<R> random_table(Sampler& s) { return make_connection(s.rational(), s.rational(), s.rational(), s.rational()); }

}  // namespace

TEST(ConnectionTable, TableEntries) {
  const R chi(1), kappa(2), alpha(7), beta(5);
  const auto ct = make_connection(chi, kappa, alpha, beta);
  EXPECT_EQ(nabla(ct, E::X(), E::Y()), R(1, 2) * E::Z());
  EXPECT_EQ(nabla(ct, E::Y(), E::X()), R(-1, 2) * E::Z());
  EXPECT_EQ(nabla(ct, E::Y(), E::Z()), E::of(R(3, 2), 0, 5));
  EXPECT_EQ(nabla(ct, E::X(), E::Z()), E::of(0, R(-1, 2), 7));
  EXPECT_EQ(nabla(ct, E::Z(), E::X()), E::of(0, R(1, 2), 7));
  EXPECT_EQ(nabla(ct, E::Z(), E::Y()), E::of(R(-3, 2), 0, 5));
  for (const auto& e : kBasis) EXPECT_TRUE(nabla(ct, e, e).is_zero());
}

TEST(ConnectionTable, BilinearOverConstants) {
  Sampler s(4);
  const auto ct = random_table(s);
  const E a = E::of(s.rational(), s.rational(), s.rational());
  const E b = E::of(s.rational(), s.rational(), s.rational());
  const E c = E::of(s.rational(), s.rational(), s.rational());
  const R t = s.rational();
  EXPECT_EQ(nabla(ct, a + t * c, b), nabla(ct, a, b) + t * nabla(ct, c, b));
  EXPECT_EQ(nabla(ct, a, b + t * c), nabla(ct, a, b) + t * nabla(ct, a, c));
}

TEST(ConnectionTable, MatchesHalfBracketPlusPrescribedU) {
  Sampler s(9);
  for (int n = 0; n < 50; ++n) {
    const ConnectionParameters<R> p{s.rational(), s.rational(), s.rational(), s.rational()};
    const auto ct = make_connection(p.chi, p.kappa, p.alpha, p.beta);
    const auto rebuilt = connection_from_u_term(ct.structure, prescribed_u_term(p.alpha, p.beta), p);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) {
        EXPECT_EQ(ct.table[a][b], rebuilt.table[a][b]);
        // the symmetric part of nabla - 1/2 bracket
        const E ua = nabla(ct, kBasis[a], kBasis[b]) - R(1, 2) * bracket(ct.structure, kBasis[a], kBasis[b]);
        const E ub = nabla(ct, kBasis[b], kBasis[a]) - R(1, 2) * bracket(ct.structure, kBasis[b], kBasis[a]);
        EXPECT_EQ(ua, ub);
      }
  }
}

TEST(Torsion, VanishesExactly) {
  Sampler s(12);
  for (int n = 0; n < 200; ++n) {
    const auto ct = random_table(s);
    for (const auto& a : kBasis)
      for (const auto& b : kBasis) EXPECT_TRUE(torsion(ct, a, b).is_zero());
  }
  const auto ct = make_connection(R(1), R(2), R(7), R(0));
  EXPECT_TRUE(torsion(ct, E::X(), E::Z()).is_zero());
}

TEST(Torsion, DetectsSignFlip) {
  auto ct = make_connection(R(1), R(2), R(0), R(0));
  ct.table[0][1] = -ct.table[0][1];
  EXPECT_EQ(torsion(ct, E::X(), E::Y()), R(-1) * E::Z());
}

TEST(MetricParallel, HorizontalDefectVanishes) {
  Sampler s(21);
  const std::array<E, 2> h{E::X(), E::Y()};
  for (int n = 0; n < 200; ++n) {
    const auto ct = random_table(s);
    for (const auto& a : h)
      for (const auto& b : h)
        for (const auto& c : h) EXPECT_EQ(metric_parallel_defect(ct, a, b, c), 0);
  }
  const auto ct = make_connection(R(1), R(1), R(1), R(1));
  EXPECT_THROW(metric_parallel_defect(ct, E::Z(), E::X(), E::Y()), NonHorizontalError);
  EXPECT_THROW(metric_parallel_defect(ct, E::X(), E::X(), E::of(0, 1, 1)), NonHorizontalError);
}

TEST(UTerm, FromMetric) {
  const auto id = CandidateMetric<R>::identity();
  EXPECT_TRUE(u_term_from_metric(id, general_structure(R(0), R(0)), E::X(), E::Y()).is_zero());
  for (int c = -2; c <= 3; ++c) {
    const R chi(c), kappa(c * c - 1);
    const Vec3<R> rhs = u_term_rhs(id, general_structure(chi, kappa), E::X(), E::Y());
    EXPECT_EQ(rhs[2], -2 * chi);
    EXPECT_TRUE(u_term_from_metric(id, cartan_structure(chi), E::X(), E::Y()).is_zero());
  }
  EXPECT_THROW(u_term_from_metric(CandidateMetric<R>::make(0, 0, 0), general_structure(R(1), R(1)), E::X(), E::Y()),
               SingularMatrixError);
}

// Residual formulas derived by hand for the metric with free entries p = <X,Z>, q = <Y,Z>, s = <Z,Z>.
TEST(UTerm, ConsistencyResidualClosedForms) {
  Sampler rng(5);
  for (int n = 0; n < 40; ++n) {
    const R chi = rng.rational(), kappa = rng.rational(), alpha = rng.rational(), beta = rng.rational();
    const R p = rng.rational(), q = rng.rational(), s = rng.rational();
    const auto m = CandidateMetric<R>::make(p, q, s);
    const auto sc = general_structure(chi, kappa);
    const auto u = prescribed_u_term(alpha, beta);
    EXPECT_EQ(u_consistency_residual(m, sc, u, Basis::X, Basis::Y), (Vec3<R>{p / 2, -q / 2, -chi}));
    EXPECT_EQ(u_consistency_residual(m, sc, u, Basis::X, Basis::Z),
              (Vec3<R>{-alpha * p, (chi + kappa - s) / 2 - alpha * q, (kappa - chi) * q / 2 - alpha * s}));
    EXPECT_EQ(u_consistency_residual(m, sc, u, Basis::Y, Basis::Z),
              (Vec3<R>{(s + chi - kappa) / 2 - beta * p, -beta * q, -(chi + kappa) * p / 2 - beta * s}));
  }
}

TEST(MetricObstruction, ZSlotIsMinusChi) {
  const std::array<R, 5> grid{R(-2), R(-1), R(0), R(1, 2), R(3)};
  for (int c : {-3, -1, 1, 2}) {
    const auto rep = metric_obstruction(R(c), R(4), R(1), R(-1), std::span<const R>(grid));
    EXPECT_EQ(rep.u_xy_z_slot, R(-c));
    EXPECT_TRUE(rep.z_slot_metric_independent);
    EXPECT_FALSE(rep.u_xy_admits_metric);
    ASSERT_EQ(rep.samples.size(), 125u);
    for (const auto& s : rep.samples) {
      EXPECT_EQ(s.u_xy_residual[2], R(-c));
      EXPECT_FALSE(s.matches_all_pairs);
    }
  }
  const auto zero = metric_obstruction(R(0), R(5), R(2), R(3), std::span<const R>(grid));
  EXPECT_EQ(zero.u_xy_z_slot, 0);
  EXPECT_TRUE(zero.u_xy_admits_metric);
}

// chi = kappa = alpha = beta = 0: the identity metric reproduces U(X,Y) but U(X,Z)
// would need <Z,Z> = 0; with kappa = 1 it reproduces every pair.
TEST(MetricObstruction, IdentityMetricCases) {
  const std::array<R, 1> grid{R(0)};
  const auto id = CandidateMetric<R>::identity();
  const auto flat_sc = general_structure(R(0), R(0));
  const auto flat_u = prescribed_u_term(R(0), R(0));
  EXPECT_EQ(u_consistency_residual(id, flat_sc, flat_u, Basis::X, Basis::Y), (Vec3<R>{0, 0, 0}));
  EXPECT_EQ(u_consistency_residual(id, flat_sc, flat_u, Basis::X, Basis::Z), (Vec3<R>{0, R(-1, 2), 0}));

  const auto sc = general_structure(R(0), R(1));
  for (auto [a, b] : {std::pair{Basis::X, Basis::Y}, std::pair{Basis::X, Basis::Z}, std::pair{Basis::Y, Basis::Z}})
    EXPECT_EQ(u_consistency_residual(id, sc, flat_u, a, b), (Vec3<R>{0, 0, 0}));
  (void)grid;
}

TEST(Curvature, ClosedForms) {
  Sampler s(33);
  for (int n = 0; n < 200; ++n) {
    const R chi = s.rational(), kappa = s.rational(), alpha = s.rational(), beta = s.rational();
    const auto ct = make_connection(chi, kappa, alpha, beta);
    EXPECT_EQ(curvature(ct, E::X(), E::Y(), E::X()), E::of(0, (chi - kappa) / 4, -R(3, 2) * alpha));
    EXPECT_EQ(curvature(ct, E::X(), E::Y(), E::Y()), E::of((chi + kappa) / 4, 0, -R(3, 2) * beta));
    EXPECT_EQ(curvature(ct, E::X(), E::Y(), E::Z()),
              E::of(-alpha / 2 * (chi + kappa), beta / 2 * (chi - kappa), 0));
    for (const auto& a : kBasis)
      for (const auto& b : kBasis)
        for (const auto& c : kBasis) EXPECT_EQ(curvature(ct, a, b, c), -curvature(ct, b, a, c));
  }
}

TEST(Curvature, HorizontalWhenOnlyKappa) {
  Sampler s(2);
  for (int n = 0; n < 20; ++n) {
    const auto ct = make_connection(R(0), s.rational(), R(0), R(0));
    for (const auto& c : kBasis) EXPECT_TRUE(curvature(ct, E::X(), E::Y(), c).is_horizontal());
  }
}

TEST(Curvature, FloatingPathAgrees) {
  const auto exact = make_connection(R(1, 3), R(2), R(-1, 2), R(5, 4));
  const auto approx = make_connection(1.0 / 3, 2.0, -0.5, 1.25);
  for (const auto& c : {AlgebraElement<double>::X(), AlgebraElement<double>::Y(), AlgebraElement<double>::Z()}) {
    const auto d = curvature(approx, AlgebraElement<double>::X(), AlgebraElement<double>::Y(), c);
    const auto e = curvature(exact, E::X(), E::Y(), E::of(R(c[0]), R(c[1]), R(c[2])));
    for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(d[k], to_double(e[k]), 1e-12);
  }
}
