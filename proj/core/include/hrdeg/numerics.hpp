#pragma once

#include <Eigen/Dense>

#include <vector>

namespace hrdeg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// kernel threshold shared by every rank / kernel-dimension check
inline constexpr double kKernelRelTol = 1e-9;

struct SymEigen {
  Vector values;   // ascending
  Matrix vectors;  // columns, orthonormal
};

// Cyclic Jacobi. Throws std::invalid_argument if A is not symmetric to 1e-12.
SymEigen sym_eigen(const Matrix& A);

bool is_symmetric(const Matrix& A, double tol = 1e-12);
Matrix symmetrize(const Matrix& A);

// f applied to the spectrum of a symmetric matrix
template <class F>
Matrix sym_apply(const Matrix& A, F f) {
  SymEigen e = sym_eigen(A);
  Vector fv = e.values.unaryExpr(f);
  return e.vectors * fv.asDiagonal() * e.vectors.transpose();
}

void require_spd(const Matrix& P, double tol = 1e-8);
Matrix spd_sqrt(const Matrix& P);
Matrix spd_inv_sqrt(const Matrix& P);
Matrix sym_exp(const Matrix& S);
Matrix spd_log(const Matrix& P);

// affine-invariant chart maps at P: Exp_P(U) = P^½ exp(P^-½ U P^-½) P^½
Matrix spd_exp_at(const Matrix& P, const Matrix& U);
Matrix spd_log_at(const Matrix& P, const Matrix& Q);

// matrix exponential of a general (small) real matrix
Matrix mat_exp(const Matrix& A);

// Linear subspace of R^n given by orthonormal columns. Zero subspace has 0 columns.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Matrix basis, int ambient);

  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  // orthonormalize arbitrary spanning columns, dropping numerically dependent ones
  static Subspace span(const Matrix& cols, int ambient, double rel_tol = kKernelRelTol);

  int dim() const { return static_cast<int>(basis_.cols()); }
  int ambient() const { return ambient_; }
  const Matrix& basis() const { return basis_; }
  Matrix projector() const { return basis_ * basis_.transpose(); }
  Vector project(const Vector& v) const { return basis_ * (basis_.transpose() * v); }
  double distance_to(const Vector& v) const { return (v - project(v)).norm(); }
  bool contains(const Subspace& other, double tol = 1e-8) const;

 private:
  Matrix basis_;
  int ambient_ = 0;
};

Subspace orthonormal_complement(const Subspace& V, int ambient_dim);
// columns need not be orthonormal; result is an orthonormal basis of the span
Subspace sum(const Subspace& a, const Subspace& b);

// numerical rank with |s| < rel_tol*max|s| counted as zero
int numerical_rank(const Matrix& A, double rel_tol = kKernelRelTol);
// orthonormal basis of the null space of A (columns)
Matrix null_space(const Matrix& A, double rel_tol = kKernelRelTol);

// largest principal angle between the spans of two orthonormal column sets;
// the smaller set is measured against the larger one
double largest_principal_angle(const Matrix& A, const Matrix& B);

// exact integer rank
int integer_rank(const std::vector<std::vector<long long>>& rows);

}  // namespace hrdeg
