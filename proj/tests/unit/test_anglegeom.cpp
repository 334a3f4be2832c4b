#include "hrdeg/anglegeom.hpp"
#include "hrdeg/rootcomb.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hrdeg;

TEST(SubspaceAngle, ExplicitConfigurations) {
  Matrix e1(3, 1), e2(3, 1), xy(3, 2);
  e1 << 1, 0, 0;
  e2 << 0, 1, 0;
  xy << 1, 0, 0, 1, 0, 0;
  Subspace L1(e1, 3), L2(e2, 3), P(xy, 3);
  EXPECT_NEAR(subspace_angle(L1, L2), M_PI / 2, 1e-12);
  EXPECT_NEAR(subspace_angle(L1, P), 0, 1e-7);
  EXPECT_NEAR(subspace_angle(P, L1), 0, 1e-7);   // the smaller one is measured
  Matrix tilted(3, 1);
  tilted << std::cos(0.25), 0, std::sin(0.25);
  EXPECT_NEAR(subspace_angle(Subspace(tilted, 3), P), 0.25, 1e-12);
  // two planes in R^4 with principal angles 0.2 and 0.9: largest is 0.9
  Matrix A(4, 2), B(4, 2);
  A << 1, 0, 0, 1, 0, 0, 0, 0;
  B << std::cos(0.2), 0, 0, std::cos(0.9), std::sin(0.2), 0, 0, std::sin(0.9);
  EXPECT_NEAR(subspace_angle(Subspace(A, 4), Subspace(B, 4)), 0.9, 1e-12);
}

TEST(AngleProperties, NoViolationsSmallRun) {
  for (int d = 1; d <= 6; ++d) {
    AnglePropertyReport r = check_angle_properties(d, 300, 17);
    EXPECT_TRUE(r.pass()) << d;
    EXPECT_EQ(r.trials, 300);
    EXPECT_LE(r.max_triangle_excess, 1e-12);
    for (auto& [k, v] : r.violations) EXPECT_EQ(v, 0) << k << " dim " << d;
  }
}

TEST(AngleProperties, LiteralSixthPropertyFails) {
  // the printed direction of the sixth inequality has counterexamples from dimension 3 on
  EXPECT_GT(check_angle_properties(4, 500, 3).literal_p6_counterexamples, 0);
}

TEST(AngleProperties, Deterministic) {
  auto a = check_angle_properties(5, 200, 9), b = check_angle_properties(5, 200, 9);
  EXPECT_EQ(a.checks, b.checks);
  EXPECT_EQ(a.literal_p6_counterexamples, b.literal_p6_counterexamples);
  EXPECT_EQ(a.max_triangle_excess, b.max_triangle_excess);
}

TEST(MatchedSubspace, DimensionsAgreeWithRootData) {
  for (auto spec : {"spd:4", "spd:5", "hyp:3", "hyp:5"}) {
    auto m = make_space(spec);
    const RootSystem& rs = m->root_system();
    for (int q = 1; q <= rs.rank; ++q)
      for (auto& S : root_kernel_subspaces(rs, q)) {
        MatchedSubspace ms = matched_subspace(*m, S.span);
        EXPECT_EQ(ms.vprime.dim(), ms.predicted_dim) << spec;
        EXPECT_TRUE(ms.dimension_ok) << spec << " q=" << q;
        // V' is orthogonal to the flat a
        Subspace a = Subspace::span(m->embed_cartan_subspace(rs.cartan_basis()), m->dim());
        EXPECT_LE((a.basis().transpose() * ms.vprime.basis()).norm(), 1e-9);
      }
  }
}

TEST(MatchedSubspace, SpdThreeFullFlatIsShort) {
  auto m = make_space("spd:3");
  const RootSystem& rs = m->root_system();
  MatchedSubspace ms = matched_subspace(*m, root_kernel_subspaces(rs, 2)[0].span);
  // SL(3,R): dim V' = 3 < 4 = 2 dim a
  EXPECT_EQ(ms.vprime.dim(), 3);
  EXPECT_FALSE(ms.dimension_ok);
}

TEST(MatchedSubspace, SpdWallByHand) {
  // SPD(3), V = kernel of e1 - e2 spanned by (1,1,-2): roots not vanishing on V are
  // e1-e3 and e2-e3, so V' is spanned by the off diagonal (1,3) and (2,3) entries
  auto m = make_space("spd:3");
  Matrix v(3, 1);
  v << 1, 1, -2;
  MatchedSubspace ms = matched_subspace(*m, Subspace::span(v, 3));
  ASSERT_EQ(ms.vprime.dim(), 2);
  for (int j = 0; j < 2; ++j) {
    Matrix Z = m->p_matrix(ms.vprime.basis().col(j));
    EXPECT_NEAR(Z(0, 1), 0, 1e-10);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(Z(i, i), 0, 1e-10);
  }
}

TEST(MatchingConstant, HyperbolicIsOne) {
  auto m = make_space("hyp:3");
  MatchingResult r = empirical_matching_constant(*m, 1, 200, 4);
  EXPECT_TRUE(r.violations.empty());
  // the supremum 1 is approached, not attained, by the sample
  EXPECT_LE(r.c_hat, 1 + 1e-12);
  EXPECT_GT(r.c_hat, 0.999);
}

TEST(MatchingConstant, SpdFourFinite) {
  auto m = make_space("spd:4");
  MatchingResult r = empirical_matching_constant(*m, 1, 200, 4);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_TRUE(std::isfinite(r.c_hat));
  EXPECT_GE(r.c_hat, 1);
  EXPECT_FALSE(r.frame_deficient);
}

TEST(MatchingConstant, SpdThreeChainOfTwoIsDeficient) {
  auto m = make_space("spd:3");
  MatchingResult r = empirical_matching_constant(*m, 2, 60, 4);
  EXPECT_TRUE(r.frame_deficient);
  EXPECT_FALSE(r.violations.empty());
  EXPECT_THROW(empirical_matching_constant(*m, 3, 10, 1), std::invalid_argument);
}
