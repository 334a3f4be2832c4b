#include "hrdeg/rootcomb.hpp"

#include "root_oracles.hpp"

#include <gtest/gtest.h>

using namespace hrdeg;

namespace {

const std::vector<std::string> kSystems{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "BC1"};

}  // namespace

TEST(Flats, MaxCardsMatchBruteForce) {
  for (auto& f : kSystems) {
    RootSystem rs = build_root_system(f);
    EXPECT_EQ(card_sequence(rs), oracle::max_cards(rs.roots, rs.ambient_dim)) << f;
  }
}

TEST(Flats, KnownSequences) {
  // A2: a line holds one pair, the plane all three
  EXPECT_EQ(card_sequence(build_root_system("A2")), (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(card_sequence(build_root_system("A3")), (std::vector<int>{0, 1, 3, 6}));
  EXPECT_EQ(card_sequence(build_root_system("B2")), (std::vector<int>{0, 1, 4}));
  EXPECT_EQ(card_sequence(build_root_system("G2")), (std::vector<int>{0, 1, 6}));
}

TEST(Flats, MaximallyRootedSubspaces) {
  RootSystem rs = build_root_system("A3");
  MaximallyRooted mr = maximally_rooted(rs, 2);
  EXPECT_EQ(mr.card, 3);
  // A2 subsystems of A3: one per omitted coordinate
  EXPECT_EQ(mr.subspaces.size(), 4u);
  for (auto& s : mr.subspaces) {
    EXPECT_EQ(s.span.dim(), 2);
    EXPECT_EQ(card_R(rs, s.span), 3);
  }
  EXPECT_THROW(maximally_rooted(rs, 4), std::invalid_argument);
}

TEST(Kernels, RootKernelSubspaces) {
  RootSystem rs = build_root_system("A2");
  EXPECT_EQ(root_kernel_subspaces(rs, 1).size(), 3u);   // three walls
  EXPECT_EQ(root_kernel_subspaces(rs, 2).size(), 1u);   // a itself
  EXPECT_EQ(root_kernel_subspaces(rs, 0).size(), 1u);
  for (auto& s : root_kernel_subspaces(rs, 1)) EXPECT_EQ(s.defining_roots.size(), 2u);
  // B2 has walls of two lengths, all killing one pair
  auto ms = maximally_singular(build_root_system("B2"), 1);
  EXPECT_EQ(ms.size(), 4u);
}

TEST(Irreducibility, Sums) {
  EXPECT_TRUE(is_irreducible(build_root_system("G2")));
  EXPECT_FALSE(is_irreducible(direct_sum({build_root_system("A1"), build_root_system("A1")})));
  EXPECT_THROW(verify_card_recursion(direct_sum({build_root_system("A1"), build_root_system("A1")})),
               std::invalid_argument);
}

TEST(Inequalities, A2FailsAtZero) {
  InequalityReport r = verify_dim_inequality(build_root_system("A2"));
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.failing_q(), std::vector<int>{0});
  for (auto& row : r.rows)
    if (row.q == 0) {
      EXPECT_EQ(row.lhs, 3);
      EXPECT_EQ(row.rhs, 4);
    }
}

TEST(Inequalities, DimInequalityAgreesWithBruteForce) {
  for (auto& f : kSystems) {
    RootSystem rs = build_root_system(f);
    std::vector<int> mc = oracle::max_cards(rs.roots, rs.ambient_dim);
    const int total = static_cast<int>(oracle::pair_representatives(rs.roots).size());
    std::vector<int> fail;
    for (int q = 0; q <= rs.rank; ++q)
      if (total - mc[q] < 2 * (rs.rank - q)) fail.push_back(q);
    EXPECT_EQ(verify_dim_inequality(rs).failing_q(), fail) << f;
    if (rs.rank >= 2 && f != "A2") EXPECT_TRUE(fail.empty()) << f;
  }
}

TEST(Inequalities, CardRecursionHolds) {
  for (auto& f : kSystems) EXPECT_TRUE(verify_card_recursion(build_root_system(f)).pass()) << f;
}

TEST(Inequalities, DimK) {
  auto sl3 = verify_dimK_inequality(build_root_system("A2"), 0);
  EXPECT_EQ(sl3.failing_q(), std::vector<int>{2});
  for (auto& row : sl3.rows)
    if (row.q == 2) {
      EXPECT_EQ(row.lhs, 3);
      EXPECT_EQ(row.rhs, 4);
    }
  auto sl4 = verify_dimK_inequality(build_root_system("A3"), 0);
  EXPECT_TRUE(sl4.pass());
  for (auto& row : sl4.rows)
    if (row.q == 3) {
      EXPECT_EQ(row.lhs, 6);
      EXPECT_EQ(row.rhs, 6);
    }
  // SL(3,C)/SU(3): multiplicity 2, k0 = the 2-torus
  EXPECT_TRUE(verify_dimK_inequality(build_root_system("A2", {2}), 2).pass());
  // H^3: SO(3), one pair of multiplicity 2, k0 = so(2)
  EXPECT_TRUE(verify_dimK_inequality(build_root_system("BC1", {2}), 1).pass());
  EXPECT_FALSE(verify_dimK_inequality(build_root_system("BC1", {1}), 0).pass());
  EXPECT_THROW(verify_dimK_inequality(build_root_system("A2"), -1), std::invalid_argument);
}

TEST(CardR, CountsPairsInSubspace) {
  RootSystem rs = build_root_system("A2");
  Matrix v(3, 1);
  v << 1, -1, 0;
  EXPECT_EQ(card_R(rs, Subspace::span(v, 3)), 1);
  Matrix off(3, 1);
  off << 1, 1, 1;   // not in the sum-zero plane
  EXPECT_THROW(card_R(rs, Subspace::span(off, 3)), std::invalid_argument);
}
