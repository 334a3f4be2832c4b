#pragma once

#include "hrdeg/numerics.hpp"

#include <string>
#include <vector>

namespace hrdeg {

// Root coordinates are integer vectors in an ambient R^d. The cartan
// subalgebra a is the span of the roots; the inner product on R^d is Gram.
// For A_r the ambient is R^{r+1} (sum-zero hyperplane), for G_2 it is R^3.
struct RootSystem {
  std::string family;                    // "A3", "B2", "BC1", "G2", or "A2+A1" for sums
  int rank = 0;
  int ambient_dim = 0;
  std::vector<std::vector<long long>> roots;
  std::vector<int> multiplicities;
  Matrix gram;                           // ambient inner product
  std::vector<int> factor_of_coord;      // which irreducible block owns each coordinate

  int size() const { return static_cast<int>(roots.size()); }
  Vector root(int i) const;              // covector coordinates as doubles
  Vector dual(int i) const;              // H_alpha with alpha(Y) = <H_alpha, Y>
  double eval(int i, const Vector& Y) const { return root(i).dot(Y); }
  double inner(const Vector& a, const Vector& b) const { return a.dot(gram * b); }
  double norm(const Vector& a) const;
  int negative_of(int i) const;
  // orthonormal basis (w.r.t. gram) of the cartan subalgebra, as ambient columns
  Matrix cartan_basis() const;
};

// multiplicity profile: one entry per root length (short first) or a single value for all
RootSystem build_root_system(const std::string& family, const std::vector<int>& multiplicity_profile = {1});
RootSystem direct_sum(const std::vector<RootSystem>& parts);
// multiply the inner product by factor (metric knob)
RootSystem rescaled(const RootSystem& rs, double factor);
void validate_root_system(const RootSystem& rs);

struct ChamberData {
  Vector direction;                      // the regular direction that chose the chamber
  std::vector<int> positive_roots;
  std::vector<int> simple_roots;
  Vector barycenter;                     // b in ambient coordinates
  Vector unit_barycenter;                // b+
};

ChamberData chamber(const RootSystem& rs, const Vector& regular_direction);
// a fixed regular direction for the family (decreasing coordinates for A_r)
Vector default_regular_direction(const RootSystem& rs);
ChamberData default_chamber(const RootSystem& rs);

double entropy(const RootSystem& rs, const ChamberData& cd);

struct SpectrumEntry {
  double eigenvalue;
  int multiplicity;
};
// ascending, zero block first
std::vector<SpectrumEntry> busemann_hessian_spectrum(const RootSystem& rs, const ChamberData& cd);
double eigenvalue_bounds(const RootSystem& rs, const ChamberData& cd);
double ricci_entropy_bound(int n, double kappa);

// multiplicity sum over positive roots plus rank
int symmetric_space_dim(const RootSystem& rs);

}  // namespace hrdeg
