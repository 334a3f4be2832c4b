// Real hyperbolic space on the upper sheet of -x0^2 + |xbar|^2 = -1, curvature -1.
// Boundary points are unit spatial directions u (the null ray (1,u)).
#include "hrdeg/spaces.hpp"

#include <cmath>
#include <stdexcept>

namespace hrdeg {

namespace {

class HyperbolicFactor final : public FactorModel {
 public:
  explicit HyperbolicFactor(int n) : n_(n) {
    if (n < 2 || n > 63) throw std::invalid_argument("hyperbolic model needs 2 <= n <= 63");
    rs_ = build_root_system("BC1", {n - 1, 0});
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Matrix K = Matrix::Zero(n + 1, n + 1);
        K(i, j) = 1;
        K(j, i) = -1;
        kbasis_.push_back(K);
      }
  }

  std::string name() const override { return "hyp:" + std::to_string(n_); }
  int dim() const override { return n_; }
  int lie_size() const override { return n_ + 1; }
  const RootSystem& root_system() const override { return rs_; }

  Matrix basepoint() const override {
    Matrix p = Matrix::Zero(n_ + 1, 1);
    p(0, 0) = 1;
    return p;
  }

  void validate_point(const Matrix& x) const override {
    if (x.rows() != n_ + 1 || x.cols() != 1) throw std::invalid_argument("hyperboloid point has wrong size");
    if (!x.allFinite()) throw std::invalid_argument("hyperboloid point is not finite");
    double x0 = x(0, 0), q = -x0 * x0 + x.bottomRows(n_).squaredNorm();
    if (x0 <= 0 || std::abs(q + 1) > 1e-8 * std::max(1.0, x0 * x0))
      throw std::invalid_argument("point is not on the upper hyperboloid sheet");
  }

  void validate_frame(const Matrix& k) const override {
    if (k.rows() != n_ || k.cols() != 1) throw std::invalid_argument("boundary direction has wrong size");
    if (std::abs(k.norm() - 1) > 1e-10) throw std::invalid_argument("boundary direction is not a unit vector");
  }

  double distance(const Matrix& x, const Matrix& y) const override {
    double ip = x(0, 0) * y(0, 0) - x.bottomRows(n_).col(0).dot(y.bottomRows(n_).col(0));
    if (ip > 2) return std::acosh(ip);
    // |x-y|^2 in the Minkowski form equals 4 sinh^2(d/2), no cancellation near the diagonal
    Vector dx = x.col(0) - y.col(0);
    double m = dx.tail(n_).squaredNorm() - dx(0) * dx(0);
    return 2 * std::asinh(0.5 * std::sqrt(std::max(0.0, m)));
  }

  Matrix section(const Matrix& x) const override {
    double x0 = x(0, 0);
    Vector xb = x.bottomRows(n_).col(0);
    Matrix L(n_ + 1, n_ + 1);
    L(0, 0) = x0;
    L.block(0, 1, 1, n_) = xb.transpose();
    L.block(1, 0, n_, 1) = xb;
    L.block(1, 1, n_, n_) = Matrix::Identity(n_, n_) + xb * xb.transpose() / (1 + x0);
    return L;
  }

  Matrix act_point(const Matrix& g, const Matrix& x) const override { return g * x; }

  Matrix act_frame(const Matrix& g, const Matrix& k) const override {
    Vector xi(n_ + 1);
    xi(0) = 1;
    xi.tail(n_) = k.col(0);
    Vector w = g * xi;
    return canonical_frame(w.tail(n_));
  }

  Matrix canonical_frame(const Matrix& k) const override { return k / k.norm(); }

  Matrix pulled_frame(const Matrix& x, const Matrix& k) const override {
    // L_x^-1 (1,u) written without the e^d cancellation of the matrix product
    double x0 = x(0, 0);
    Vector xb = x.bottomRows(n_).col(0);
    Vector u = k.col(0) / k.norm();
    double a = xb.dot(u);
    Vector perp = xb - a * u;
    double w0 = a > 0 ? (1 + perp.squaredNorm()) / (x0 + a) : x0 - a;
    Vector w = (u * (1 + w0 * (1 - a)) - perp * (1 + w0)) / (1 + x0);
    return w / w.norm();
  }

  // x0 ~ e^d / 2; past d ~ 35 the hyperboloid constraint drowns in rounding
  double numerical_horizon() const override { return 30; }

  Matrix frame_rotation(const Matrix& k) const override {
    // reflection swapping e1 and u
    Matrix R = Matrix::Identity(n_ + 1, n_ + 1);
    Vector v = Vector::Zero(n_);
    v(0) = 1;
    v -= k.col(0);
    double vv = v.squaredNorm();
    if (vv > 1e-30) R.block(1, 1, n_, n_) -= 2 * v * v.transpose() / vv;
    return R;
  }

  Matrix base_frame() const override {
    Matrix e = Matrix::Zero(n_, 1);
    e(0, 0) = 1;
    return e;
  }

  Matrix p_matrix(const Vector& c) const override {
    Matrix X = Matrix::Zero(n_ + 1, n_ + 1);
    X.block(1, 0, n_, 1) = c;
    X.block(0, 1, 1, n_) = c.transpose();
    return X;
  }

  Vector p_coords(const Matrix& Z) const override {
    return 0.5 * (Z.block(1, 0, n_, 1) + Z.block(0, 1, 1, n_).transpose());
  }

  std::vector<Matrix> k_basis() const override { return kbasis_; }

  Vector embed_cartan(const Vector& a) const override {
    Vector c = Vector::Zero(n_);
    c(0) = a(0);
    return c;
  }

  Vector log_p(const Matrix& y) const override {
    Vector yb = y.bottomRows(n_).col(0);
    double s = yb.norm();
    if (s == 0) return Vector::Zero(n_);
    return std::asinh(s) / s * yb;
  }

  double busemann(const Matrix& x, const Matrix& k) const override {
    double x0 = x(0, 0);
    Vector xb = x.bottomRows(n_).col(0);
    Vector u = k.col(0);
    double a = xb.dot(u);
    if (a <= 0) return std::log(x0 - a);
    // x0 - a = (1 + |xb - a u|^2) / (x0 + a) avoids cancellation deep toward u
    return std::log((1 + (xb - a * u).squaredNorm()) / (x0 + a));
  }

  Matrix limit_frame(const Vector& c) const override { return c / c.norm(); }

  double flag_distance(const Matrix& k1, const Matrix& k2) const override {
    return 2 * std::asin(std::min(1.0, 0.5 * (k1 - k2).norm()));
  }

  Matrix random_frame(CounterRng& rng) const override { return random_unit(rng, n_); }

  Matrix random_isometry(CounterRng& rng) const override {
    Vector c = random_unit(rng, n_) * rng.uniform(0.0, 2.0);
    Matrix x = mat_exp(p_matrix(c)) * basepoint();
    return section(x) * random_rotation(rng);
  }

  Matrix random_rotation(CounterRng& rng) const override {
    Matrix R = Matrix::Identity(n_ + 1, n_ + 1);
    R.block(1, 1, n_, n_) = haar_orthogonal(rng, n_);
    return R;
  }

  Matrix chart_tangent(const Matrix& x, const Vector& c) const override {
    Vector t = Vector::Zero(n_ + 1);
    t.tail(n_) = c;
    return section(x) * t;
  }

 private:
  int n_;
  RootSystem rs_;
  std::vector<Matrix> kbasis_;
};

}  // namespace

std::shared_ptr<const FactorModel> make_hyperbolic_factor(int n) { return std::make_shared<HyperbolicFactor>(n); }

}  // namespace hrdeg
