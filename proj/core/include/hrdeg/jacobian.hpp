#pragma once

#include "hrdeg/barymap.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hrdeg {

struct JacobianData {
  Matrix Q1;      // sum w v v^T
  Matrix Q2;      // sum w (I - flat projector)
  Matrix Hess;    // sum w DdB
  Vector L;       // eigenvalues of Q2, ascending
  double det_q1 = 0, det_q2 = 0, det_hess = 0;
  double ratio = 0;             // det(Q1)^(1/2) / det(Hess), inf when Hess is singular
  double simplified_ratio = 0;  // det(Q1) / det(Q2)^2
};

// determinant of a symmetric PSD matrix as the product of its eigenvalues
double sym_det(const Matrix& S);

JacobianData assemble(const SymmetricSpace& m, const Point& x, const BoundaryMeasure& sigma);

enum class BoundStatus { Ok, Degenerate };
std::string to_string(BoundStatus s);

struct BoundValue {
  BoundStatus status = BoundStatus::Ok;
  double value = 0;
};

// (s/sqrt n)^n det(Q1)^(1/2) / det(Hess); Degenerate when Hess is singular
BoundValue jacobian_bound_inputs(const SymmetricSpace& m, double s, const JacobianData& data);

struct BoundReport {
  double epsilon = 0;
  int k = 0;                    // #{L_i < epsilon}
  bool k_within_rank = true;
  bool all_positive = true;     // every L_i > 1e-12
  Vector L;
};

BoundReport small_eigen_census(const JacobianData& data, int rank);

struct DegenerationRow {
  double eps = 0;
  double det_q1 = 0, det_q2 = 0, det_hess = 0;
  double ratio = 0, simplified_ratio = 0;
};

struct DegenerationTable {
  std::string model;
  int haar_atoms = 0;
  double c0 = 1;
  std::vector<DegenerationRow> rows;
  double slope_q1 = 0, slope_q2 = 0, slope_ratio = 0;  // log-log fits against eps
  double ratio_spread = 0;                             // max/min simplified ratio over the sweep
  int limit_kernel_q1 = 0, limit_kernel_q2 = 0, limit_kernel_hess = 0;
};

// two Weyl-pair atoms (base flag and its image under the first simple reflection), weight (1 - c0 eps)/2 each,
// plus haar_atoms Haar flags sharing total weight c0 eps; assembled at p
BoundaryMeasure degeneration_measure(const SymmetricSpace& m, double eps, int haar_atoms, std::uint64_t seed, double c0 = 1);
DegenerationTable degeneration_experiment(const SymmetricSpace& m, const std::vector<double>& epsilons, int haar_atoms,
                                          std::uint64_t seed, double c0 = 1);
// least squares slope of log y against log x
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct ProductSplitReport {
  double det_q1 = 0, det_q1_factors = 0;      // Fischer: det_q1 <= det_q1_factors
  double det_hess = 0, det_hess_factors = 0;  // equal
  bool schur_ok = true;
  bool hess_ok = true;
};

// m is a product with at least two factors; marginals keep the weights
ProductSplitReport product_split_check(const SymmetricSpace& m, const Point& x, const BoundaryMeasure& sigma);

struct DetsumReport {
  int trials = 0;
  int violations = 0;          // determinant decreased
  int strict_checks = 0;
  int strict_violations = 0;   // positive definite sum did not strictly increase
};

DetsumReport detsum_monotonicity_check(int dim, int trials, std::uint64_t seed);

// factors excluded from the degree estimate (H^2 and SL(3,R)/SO(3))
class ExcludedFactorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct DegreeFactor {
  RootSystem rs;
  int dim = 0;
  double matching_constant = 1;   // empirical witness, not a proven constant
};

DegreeFactor degree_factor(const FactorModel& f, double matching_constant, double metric_scale = 1);

// (1/sqrt(n)^n) prod C_j^(rank_j/2) c_j^(n_j) (rank_j+1)^(n_j) * (s / prod h_j)^n
double degree_constant(const std::vector<DegreeFactor>& factors, double s);

}  // namespace hrdeg
