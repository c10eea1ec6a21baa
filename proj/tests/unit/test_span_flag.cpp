#include <gtest/gtest.h>

#include "oracles.hpp"
#include "subflag/holonomy_flag.hpp"
#include "subflag/sampling.hpp"

using namespace subflag;

namespace {

using E = AlgebraElement<Rational>;
using R = Rational;

std::vector<oracle::V3> as_rows(const std::vector<E>& es) {
  std::vector<oracle::V3> out;
  for (const auto& e : es) out.push_back({to_double(e[0]), to_double(e[1]), to_double(e[2])});
  return out;
}

// Rank of the closed-form images, computed without the library.
std::pair<std::size_t, std::size_t> oracle_dims(double chi, double kappa, double alpha, double beta) {
  const auto img = oracle::curvature_images(chi, kappa, alpha, beta);
  const std::size_t r0 = oracle::gauss_rank({{img[0][0], img[0][1], 0}, {img[1][0], img[1][1], 0}});
  return {r0, oracle::gauss_rank({img[0], img[1], img[2]})};
}

}  // namespace

TEST(SpanAlgebra, ExactAndFloatingRank) {
  const std::vector<Vec3<R>> v{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  EXPECT_EQ(rank_of(v), 2u);
  EXPECT_EQ(rank_of(std::vector<Vec3<double>>{{1, 2, 3}, {2, 4, 6 + 1e-13}, {0, 1, 1}}), 2u);
  EXPECT_EQ(rank_of(std::vector<Vec3<double>>{{1e-11, 0, 0}}), 0u);
  EXPECT_EQ(rank_of(std::vector<Vec3<double>>{{1e-9, 0, 0}}), 1u);
  EXPECT_EQ(rank_of(std::vector<Vec3<R>>{}), 0u);
}

TEST(SpanAlgebra, Intersections) {
  const std::vector<Vec3<R>> xy{{1, 0, 0}, {0, 1, 0}};
  const std::vector<Vec3<R>> yz{{0, 1, 0}, {0, 0, 1}};
  const auto both = intersect_spans(xy, yz);
  ASSERT_EQ(both.size(), 1u);
  EXPECT_EQ(both[0][0], 0);
  EXPECT_EQ(both[0][2], 0);
  EXPECT_TRUE(intersect_spans(xy, std::vector<Vec3<R>>{{0, 0, 1}}).empty());
  const auto f = intersect_spans(std::vector<Vec3<double>>{{1, 1, 0}, {0, 0, 1}}, std::vector<Vec3<double>>{{1, 0, 0}, {0, 1, 0}});
  ASSERT_EQ(f.size(), 1u);
  EXPECT_NEAR(f[0][0], f[0][1], 1e-12);
  EXPECT_NEAR(f[0][2], 0, 1e-12);
}

TEST(Filtration, BracketGenerating) {
  Sampler s(6);
  for (int n = 0; n < 20; ++n) {
    const auto f = horizontal_filtration(general_structure(s.rational(), s.rational()));
    ASSERT_TRUE(f.steps.has_value());
    EXPECT_EQ(*f.steps, 1u);
    EXPECT_EQ(f.layers.back().size(), 3u);
  }
  EXPECT_EQ(horizontal_filtration(cartan_structure(R(-1))).steps, 1u);
  const auto flat = StructureConstants<R>::from_brackets("integrable", E{}, E::X(), E{});
  const auto f = horizontal_filtration(flat);
  EXPECT_FALSE(f.bracket_generating());
  EXPECT_EQ(f.layers.size(), 1u);
}

TEST(FlagSpaces, ProjectionMatchesClosedFormBases) {
  Sampler s(44);
  for (int n = 0; n < 200; ++n) {
    const R chi = s.rational(), kappa = s.rational(), alpha = s.rational(), beta = s.rational();
    const auto flag = flag_spaces(make_connection(chi, kappa, alpha, beta));
    std::vector<E> r0, r1;
    for (const E& e : {E::of(0, (chi - kappa) / 4, 0), E::of((chi + kappa) / 4, 0, 0)})
      if (!e.is_zero()) r0.push_back(e);
    for (const E& e : {E::of(0, (chi - kappa) / 4, -R(3, 2) * alpha), E::of((chi + kappa) / 4, 0, -R(3, 2) * beta),
                       E::of(-alpha / 2 * (chi + kappa), beta / 2 * (chi - kappa), 0)})
      if (!e.is_zero()) r1.push_back(e);
    EXPECT_EQ(flag.r0_span, r0);
    EXPECT_EQ(flag.r1_span, r1);
    const auto dims = oracle_dims(to_double(chi), to_double(kappa), to_double(alpha), to_double(beta));
    EXPECT_EQ(flag.dim_r0, dims.first);
    EXPECT_EQ(flag.dim_r1, dims.second);
    EXPECT_EQ(flag.dim_r0 == 2, chi * chi != kappa * kappa);
    EXPECT_EQ(flag.dim_r0 == 0, chi == 0 && kappa == 0);
  }
}

TEST(FlagSpaces, IntersectionNestedInR1) {
  Sampler s(45);
  for (int n = 0; n < 200; ++n) {
    const auto flag = flag_spaces(make_connection(s.rational(), s.rational(), s.rational(), s.rational()),
                                  FlagMode::intersection);
    for (const auto& v : flag.r0_span) {
      EXPECT_TRUE(v.is_horizontal());
      auto joined = detail::as_vectors(flag.r1_span);
      const auto before = rank_of(joined);
      joined.push_back(v.coeffs);
      EXPECT_EQ(rank_of(joined), before);
    }
    EXPECT_LE(flag.dim_r0, flag.dim_r1);
  }
}

TEST(FlagSpaces, ModesAgreeWithoutUTerm) {
  Sampler s(46);
  for (int n = 0; n < 50; ++n) {
    const R chi = s.rational(), kappa = s.rational();
    EXPECT_EQ(flag_dimensions(chi, kappa, R(0), R(0), FlagMode::projection),
              flag_dimensions(chi, kappa, R(0), R(0), FlagMode::intersection));
  }
}

TEST(FlagDimensions, Examples) {
  EXPECT_EQ(flag_dimensions(R(0), R(0), R(0), R(0)), (std::pair<std::size_t, std::size_t>{0, 0}));
  EXPECT_EQ(flag_dimensions(R(0), R(2), R(0), R(0)), (std::pair<std::size_t, std::size_t>{2, 2}));
  EXPECT_EQ(flag_dimensions(R(1), R(1), R(1), R(0)).first, 1u);
  EXPECT_EQ(flag_dimensions(R(1), R(-1), R(0), R(0)).first, 1u);
  const auto flat = flag_spaces(make_connection(R(0), R(0), R(0), R(0)));
  EXPECT_TRUE(flat.r0_span.empty());
  EXPECT_TRUE(flat.r1_span.empty());
  const auto generic = flag_spaces(make_connection(R(1), R(3), R(1), R(2)));
  EXPECT_EQ(generic.dim_r1, oracle::gauss_rank(as_rows(generic.r1_span)));
  EXPECT_EQ(generic.dim_r1, oracle_dims(1, 3, 1, 2).second);
}

TEST(FlagDimensions, FloatingPathMatchesExact) {
  Sampler s(47);
  for (int n = 0; n < 100; ++n) {
    const R chi = s.rational(), kappa = s.rational(), alpha = s.rational(), beta = s.rational();
    for (auto mode : {FlagMode::projection, FlagMode::intersection})
      EXPECT_EQ(flag_dimensions(chi, kappa, alpha, beta, mode),
                flag_dimensions(to_double(chi), to_double(kappa), to_double(alpha), to_double(beta), mode));
  }
}

TEST(FlagDimensions, ScaleInvariant) {
  Sampler s(48);
  for (int n = 0; n < 100; ++n) {
    const R chi = s.rational(), kappa = s.rational(), alpha = s.rational(), beta = s.rational();
    R t = s.rational();
    if (t == 0) t = R(-7, 3);
    for (auto mode : {FlagMode::projection, FlagMode::intersection})
      EXPECT_EQ(flag_dimensions(chi, kappa, alpha, beta, mode),
                flag_dimensions(t * chi, t * kappa, t * alpha, t * beta, mode));
  }
}

TEST(FlagCollection, SinglePair) {
  const auto ct = make_connection(R(1), R(2), R(3), R(4));
  const auto all = holonomy_flag_collection(ct);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].pair, (std::pair{Basis::X, Basis::Y}));
  EXPECT_THROW(flag_for_pair(ct, Basis::X, Basis::Z), NonHorizontalError);
  EXPECT_THROW(parse_flag_mode("union"), UsageError);
}
