#pragma once

#include "hrdeg/rootsys.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hrdeg {

// A subspace of a spanned by dual roots, stored combinatorially: the set of
// root pairs {alpha,-alpha} whose H_alpha it contains. Membership is exact.
struct RootFlat {
  std::uint64_t pairs = 0;   // bit i <-> pair i of root_pairs()
  int rank = 0;              // dimension of the span
  int card = 0;              // card_R = number of pairs contained
};

struct SingularSubspace {
  Subspace span;                   // ambient coordinates of a
  std::vector<int> defining_roots; // roots vanishing on span (both signs)
};

struct RootedSubspace {
  Subspace span;
  std::vector<int> contained_roots;
};

struct MaximallyRooted {
  int card = 0;
  std::vector<RootedSubspace> subspaces;
};

// representative positive root index of each pair (positive for the default chamber)
std::vector<int> root_pairs(const RootSystem& rs);
// every root-spanned flat, grouped by rank, deterministic order
std::vector<std::vector<RootFlat>> root_flats(const RootSystem& rs);

int card_R(const RootSystem& rs, const Subspace& V);
MaximallyRooted maximally_rooted(const RootSystem& rs, int dim);
RootedSubspace flat_subspace(const RootSystem& rs, const RootFlat& f);
// the orthogonal complement of a flat inside a: an intersection of root kernels
SingularSubspace singular_complement(const RootSystem& rs, const RootFlat& f);
// all intersections of root kernels of the given dimension
std::vector<SingularSubspace> root_kernel_subspaces(const RootSystem& rs, int dim);
// kernel intersections of the given dimension killing the most roots
std::vector<SingularSubspace> maximally_singular(const RootSystem& rs, int dim);

bool is_irreducible(const RootSystem& rs);

struct InequalityRow {
  int q = 0;                 // dimension parameter
  std::vector<int> roots;    // roots describing the subspace
  long long lhs = 0, rhs = 0;
  bool pass = true;
};

struct InequalityReport {
  std::string system;
  std::string check;
  std::vector<InequalityRow> rows;
  bool pass() const;
  std::vector<int> failing_q() const;   // sorted, unique
};

InequalityReport verify_dim_inequality(const RootSystem& rs);
// rows i = 1..rank: card(W_i) >= i + card(W_{i-1}). Throws for reducible systems.
InequalityReport verify_card_recursion(const RootSystem& rs);
InequalityReport verify_dimK_inequality(const RootSystem& rs, int k0_dim);

// card sequence (card W_0, ..., card W_rank)
std::vector<int> card_sequence(const RootSystem& rs);

}  // namespace hrdeg
