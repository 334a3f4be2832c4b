#include "hrdeg/numerics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hrdeg {

bool is_symmetric(const Matrix& A, double tol) {
  if (A.rows() != A.cols()) return false;
  double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  return (A - A.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
}

Matrix symmetrize(const Matrix& A) { return 0.5 * (A + A.transpose()); }

SymEigen sym_eigen(const Matrix& A_in) {
  if (A_in.rows() != A_in.cols()) throw std::invalid_argument("sym_eigen: matrix not square");
  if (A_in.size() == 0) return {Vector(0), Matrix(0, 0)};
  if (!is_symmetric(A_in)) throw std::invalid_argument("sym_eigen: matrix not symmetric");
  const int n = static_cast<int>(A_in.rows());
  Matrix A = symmetrize(A_in);
  Matrix V = Matrix::Identity(n, n);
  const double fro = A.norm();
  const double stop = 1e-13 * fro;

  auto off = [&]() {
    double s = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += 2 * A(p, q) * A(p, q);
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off() > stop; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = A(p, q);
        if (apq == 0.0) continue;
        double theta = (A(q, q) - A(p, p)) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        // A <- Jᵀ A J on rows/cols p,q
        for (int k = 0; k < n; ++k) {
          double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        A(p, q) = A(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return A(a, a) < A(b, b); });
  SymEigen out{Vector(n), Matrix(n, n)};
  for (int i = 0; i < n; ++i) {
    out.values(i) = A(idx[i], idx[i]);
    out.vectors.col(i) = V.col(idx[i]);
  }
  return out;
}

void require_spd(const Matrix& P, double tol) {
  if (!is_symmetric(P, tol)) throw std::invalid_argument("matrix is not symmetric");
  Eigen::LLT<Matrix> llt(symmetrize(P));
  if (llt.info() != Eigen::Success) throw std::invalid_argument("matrix is not positive definite");
}

Matrix spd_sqrt(const Matrix& P) {
  require_spd(P);
  return sym_apply(P, [](double l) { return std::sqrt(l); });
}

Matrix spd_inv_sqrt(const Matrix& P) {
  require_spd(P);
  return sym_apply(P, [](double l) { return 1 / std::sqrt(l); });
}

Matrix sym_exp(const Matrix& S) {
  return sym_apply(S, [](double l) { return std::exp(l); });
}

Matrix spd_log(const Matrix& P) {
  require_spd(P);
  return sym_apply(P, [](double l) { return std::log(l); });
}

Matrix spd_exp_at(const Matrix& P, const Matrix& U) {
  require_spd(P);
  if (!is_symmetric(U, 1e-10)) throw std::invalid_argument("direction is not symmetric");
  Matrix r = spd_sqrt(P), ri = spd_inv_sqrt(P);
  return symmetrize(r * sym_exp(symmetrize(ri * U * ri)) * r);
}

Matrix spd_log_at(const Matrix& P, const Matrix& Q) {
  require_spd(P);
  require_spd(Q);
  Matrix r = spd_sqrt(P), ri = spd_inv_sqrt(P);
  return symmetrize(r * spd_log(symmetrize(ri * Q * ri)) * r);
}

Matrix mat_exp(const Matrix& A) { return A.exp(); }

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(Matrix basis, int ambient) : basis_(std::move(basis)), ambient_(ambient) {
  if (basis_.rows() != ambient_ && basis_.cols() > 0)
    throw std::invalid_argument("subspace basis has wrong ambient dimension");
  if (basis_.cols() == 0) basis_.resize(ambient_, 0);
  if (basis_.cols() > 0) {
    Matrix g = basis_.transpose() * basis_;
    if ((g - Matrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() > 1e-10)
      throw std::invalid_argument("subspace basis is not orthonormal");
  }
}

Subspace Subspace::zero(int ambient) { return Subspace(Matrix(ambient, 0), ambient); }
Subspace Subspace::full(int ambient) { return Subspace(Matrix::Identity(ambient, ambient), ambient); }

Subspace Subspace::span(const Matrix& cols, int ambient, double rel_tol) {
  if (cols.cols() == 0 || cols.cwiseAbs().maxCoeff() == 0.0) return zero(ambient);
  Eigen::JacobiSVD<Matrix> svd(cols, Eigen::ComputeThinU);
  const Vector& s = svd.singularValues();
  int r = 0;
  while (r < s.size() && s(r) > rel_tol * s(0)) ++r;
  Matrix U = svd.matrixU().leftCols(r);
  // a clean re-orthonormalization keeps the 1e-12 frame invariant
  Eigen::HouseholderQR<Matrix> qr(U);
  Matrix Q = qr.householderQ() * Matrix::Identity(ambient, r);
  return Subspace(Q, ambient);
}

bool Subspace::contains(const Subspace& other, double tol) const {
  if (other.dim() == 0) return true;
  Matrix r = other.basis() - basis_ * (basis_.transpose() * other.basis());
  return r.cwiseAbs().maxCoeff() <= tol;
}

Subspace orthonormal_complement(const Subspace& V, int ambient_dim) {
  if (V.ambient() != ambient_dim) throw std::invalid_argument("ambient dimension mismatch");
  const int k = V.dim();
  if (k == 0) return Subspace::full(ambient_dim);
  Matrix g = V.basis().transpose() * V.basis();
  if ((g - Matrix::Identity(k, k)).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("spanning set is rank deficient or not orthonormal");
  Eigen::HouseholderQR<Matrix> qr(V.basis());
  Matrix Q = qr.householderQ();
  Matrix C = Q.rightCols(ambient_dim - k);
  // one projection pass knocks the cross terms down to rounding level
  C -= V.basis() * (V.basis().transpose() * C);
  Eigen::HouseholderQR<Matrix> qr2(C);
  Matrix C2 = qr2.householderQ() * Matrix::Identity(ambient_dim, ambient_dim - k);
  return Subspace(C2, ambient_dim);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  Matrix cols(a.ambient(), a.dim() + b.dim());
  cols << a.basis(), b.basis();
  return Subspace::span(cols, a.ambient());
}

int numerical_rank(const Matrix& A, double rel_tol) {
  if (A.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(A);
  const Vector& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  while (r < s.size() && s(r) > rel_tol * s(0)) ++r;
  return r;
}

Matrix null_space(const Matrix& A, double rel_tol) {
  const int n = static_cast<int>(A.cols());
  if (A.rows() == 0) return Matrix::Identity(n, n);
  Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeFullV);
  const Vector& s = svd.singularValues();
  int r = 0;
  if (s.size() > 0 && s(0) > 0)
    while (r < s.size() && s(r) > rel_tol * s(0)) ++r;
  return svd.matrixV().rightCols(n - r);
}

double largest_principal_angle(const Matrix& A_in, const Matrix& B_in) {
  const Matrix& A = A_in.cols() <= B_in.cols() ? A_in : B_in;
  const Matrix& B = A_in.cols() <= B_in.cols() ? B_in : A_in;
  if (A.cols() == 0) throw std::invalid_argument("principal angle of a zero subspace");
  // sine form is accurate for small angles, cosine form for angles near pi/2
  Matrix R = A - B * (B.transpose() * A);
  double s = Eigen::JacobiSVD<Matrix>(R).singularValues()(0);
  if (s < 0.7) return std::asin(std::min(1.0, s));
  Matrix C = B.transpose() * A;
  Vector cs = Eigen::JacobiSVD<Matrix>(C).singularValues();
  double c = cs.size() ? cs(cs.size() - 1) : 0.0;
  return std::acos(std::clamp(c, 0.0, 1.0));
}

int integer_rank(const std::vector<std::vector<long long>>& rows_in) {
  if (rows_in.empty()) return 0;
  auto m = rows_in;
  const int R = static_cast<int>(m.size()), C = static_cast<int>(m[0].size());
  auto reduce = [](std::vector<long long>& r) {
    long long g = 0;
    for (long long v : r) g = std::gcd(g, v < 0 ? -v : v);
    if (g > 1)
      for (long long& v : r) v /= g;
  };
  int rank = 0;
  for (int col = 0; col < C && rank < R; ++col) {
    int piv = -1;
    for (int i = rank; i < R; ++i)
      if (m[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int i = rank + 1; i < R; ++i) {
      if (m[i][col] == 0) continue;
      long long a = m[rank][col], b = m[i][col];
      for (int j = 0; j < C; ++j) m[i][j] = a * m[i][j] - b * m[rank][j];
      reduce(m[i]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace hrdeg
