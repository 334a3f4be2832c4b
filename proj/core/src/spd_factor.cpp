// SL(n,R)/SO(n) as determinant one SPD matrices with the metric
// <U,V>_P = 1/4 tr(P^-1 U P^-1 V), so that p carries the trace form tr(XY)
// and t -> exp(2tX) is a unit speed geodesic for |X|_F = 1.
#include "hrdeg/spaces.hpp"

#include <cmath>
#include <stdexcept>

namespace hrdeg {

namespace {

class SpdFactor final : public FactorModel {
 public:
  explicit SpdFactor(int n) : n_(n) {
    if (n < 2 || n > 64) throw std::invalid_argument("SPD model needs 2 <= n <= 64");
    rs_ = build_root_system("A" + std::to_string(n - 1), {1});
    bplus_ = default_chamber(rs_).unit_barycenter;
    for (int j = 1; j < n; ++j) {
      Matrix D = Matrix::Zero(n, n);
      for (int i = 0; i < j; ++i) D(i, i) = 1;
      D(j, j) = -j;
      pbasis_.push_back(D / std::sqrt(j * (j + 1.0)));
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Matrix F = Matrix::Zero(n, n);
        F(i, j) = F(j, i) = 1 / std::sqrt(2.0);
        pbasis_.push_back(F);
        Matrix K = Matrix::Zero(n, n);
        K(i, j) = 1 / std::sqrt(2.0);
        K(j, i) = -1 / std::sqrt(2.0);
        kbasis_.push_back(K);
      }
  }

  std::string name() const override { return "spd:" + std::to_string(n_); }
  int dim() const override { return n_ * (n_ + 1) / 2 - 1; }
  int lie_size() const override { return n_; }
  const RootSystem& root_system() const override { return rs_; }
  Matrix basepoint() const override { return Matrix::Identity(n_, n_); }

  void validate_point(const Matrix& x) const override {
    if (x.rows() != n_ || x.cols() != n_) throw std::invalid_argument("SPD point has wrong size");
    if (!x.allFinite()) throw std::invalid_argument("SPD point is not finite");
    if (!is_symmetric(x, 1e-8)) throw std::invalid_argument("SPD point is not symmetric");
    Eigen::LLT<Matrix> llt(symmetrize(x));
    if (llt.info() != Eigen::Success) throw std::invalid_argument("SPD point is not positive definite");
    Vector d = llt.matrixLLT().diagonal();
    double logdet = 2 * d.array().log().sum();
    // far from p the pivots carry relative error of order eps * cond
    double cond = (d.maxCoeff() / d.minCoeff()) * (d.maxCoeff() / d.minCoeff());
    if (std::abs(logdet) > 1e-8 + 1e-14 * cond) throw std::invalid_argument("SPD point does not have determinant 1");
  }

  void validate_frame(const Matrix& k) const override {
    if (k.rows() != n_ || k.cols() != n_) throw std::invalid_argument("flag frame has wrong size");
    if ((k.transpose() * k - Matrix::Identity(n_, n_)).cwiseAbs().maxCoeff() > 1e-10)
      throw std::invalid_argument("flag frame is not orthogonal");
  }

  double distance(const Matrix& x, const Matrix& y) const override {
    Eigen::LLT<Matrix> llt(symmetrize(x));
    if (llt.info() != Eigen::Success) throw std::invalid_argument("SPD point is not positive definite");
    Matrix L = llt.matrixL();
    Matrix Li = L.triangularView<Eigen::Lower>().solve(Matrix::Identity(n_, n_));
    Matrix M = symmetrize(Li * y * Li.transpose());
    Vector ev = sym_eigen(M).values;
    double s = 0;
    for (int i = 0; i < n_; ++i) {
      if (ev(i) <= 0) throw std::invalid_argument("SPD point is not positive definite");
      s += std::log(ev(i)) * std::log(ev(i));
    }
    return 0.5 * std::sqrt(s);
  }

  Matrix section(const Matrix& x) const override { return spd_sqrt(x); }
  Matrix pulled_frame(const Matrix& x, const Matrix& k) const override { return act_frame(spd_inv_sqrt(x), k); }
  double numerical_horizon() const override { return 8; }
  Matrix act_point(const Matrix& g, const Matrix& x) const override { return symmetrize(g * x * g.transpose()); }

  Matrix act_frame(const Matrix& g, const Matrix& k) const override {
    Eigen::HouseholderQR<Matrix> qr(g * k);
    Matrix Q = qr.householderQ();
    const auto& R = qr.matrixQR();
    for (int i = 0; i < n_; ++i)
      if (R(i, i) < 0) Q.col(i) = -Q.col(i);
    return canonical_frame(Q);
  }

  Matrix canonical_frame(const Matrix& k) const override {
    // the stabilizer of a full flag in O(n) is the group of diagonal sign matrices
    Matrix out = k;
    for (int j = 0; j < n_; ++j) {
      int imax = 0;
      for (int i = 1; i < n_; ++i)
        if (std::abs(out(i, j)) > std::abs(out(imax, j)) + 1e-12) imax = i;
      if (out(imax, j) < 0) out.col(j) = -out.col(j);
    }
    return out;
  }

  Matrix frame_rotation(const Matrix& k) const override { return k; }
  Matrix base_frame() const override { return Matrix::Identity(n_, n_); }

  Matrix p_matrix(const Vector& c) const override {
    Matrix X = Matrix::Zero(n_, n_);
    for (int j = 0; j < dim(); ++j) X += c(j) * pbasis_[j];
    return X;
  }

  Vector p_coords(const Matrix& Z) const override {
    Vector c(dim());
    for (int j = 0; j < dim(); ++j) c(j) = Z.cwiseProduct(pbasis_[j]).sum();
    return c;
  }

  std::vector<Matrix> k_basis() const override { return kbasis_; }

  Vector embed_cartan(const Vector& a) const override { return p_coords(Matrix(a.asDiagonal())); }

  Vector log_p(const Matrix& y) const override { return p_coords(0.5 * spd_log(y)); }

  double busemann(const Matrix& x, const Matrix& k) const override {
    // x' = k^T x k = U D U^T with U upper unitriangular; reversing the order turns
    // that into a Cholesky factorization. B = -1/2 sum b+_i log D_i.
    Matrix xp = symmetrize(k.transpose() * x * k);
    Matrix J = Matrix::Zero(n_, n_);
    for (int i = 0; i < n_; ++i) J(i, n_ - 1 - i) = 1;
    Eigen::LLT<Matrix> llt(J * xp * J);
    if (llt.info() != Eigen::Success) throw std::invalid_argument("SPD point is not positive definite");
    const Matrix& L = llt.matrixLLT();
    double b = 0;
    for (int i = 0; i < n_; ++i) b -= bplus_(i) * std::log(L(n_ - 1 - i, n_ - 1 - i));
    return b;
  }

  Matrix limit_frame(const Vector& c) const override {
    SymEigen e = sym_eigen(p_matrix(c));
    return canonical_frame(e.vectors.rowwise().reverse());
  }

  double flag_distance(const Matrix& k1, const Matrix& k2) const override {
    double d = 0;
    for (int j = 1; j < n_; ++j) d = std::max(d, largest_principal_angle(k1.leftCols(j), k2.leftCols(j)));
    return d;
  }

  Matrix random_frame(CounterRng& rng) const override { return canonical_frame(haar_orthogonal(rng, n_)); }

  Matrix random_isometry(CounterRng& rng) const override {
    Matrix G;
    double det = 0;
    do {
      G = rng.normal_matrix(n_, n_);
      det = G.determinant();
    } while (std::abs(det) < 1e-3);
    if (det < 0) {
      G.row(0) = -G.row(0);
      det = -det;
    }
    return G / std::pow(det, 1.0 / n_);
  }

  Matrix random_rotation(CounterRng& rng) const override { return haar_orthogonal(rng, n_); }

  Matrix chart_tangent(const Matrix& x, const Vector& c) const override {
    Matrix s = section(x);
    return symmetrize(s * (2 * p_matrix(c)) * s);
  }

 private:
  int n_;
  RootSystem rs_;
  Vector bplus_;
  std::vector<Matrix> pbasis_, kbasis_;
};

}  // namespace

std::shared_ptr<const FactorModel> make_spd_factor(int n) { return std::make_shared<SpdFactor>(n); }

}  // namespace hrdeg
