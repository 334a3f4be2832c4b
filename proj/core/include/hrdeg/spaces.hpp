#pragma once

#include "hrdeg/numerics.hpp"
#include "hrdeg/random.hpp"
#include "hrdeg/rootsys.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hrdeg {

// Every model is a finite product of irreducible factors; a single factor is
// the one-element product. Points, isometries and flags hold one matrix per factor:
//   SPD(n)  point n x n (det 1), isometry n x n (det 1), flag n x n orthogonal frame
//   H^n     point (n+1) x 1 on the hyperboloid, isometry (n+1)x(n+1), flag n x 1 unit vector
struct Point {
  std::vector<Matrix> factors;
};
struct Isometry {
  std::vector<Matrix> factors;
};
struct FlagPoint {
  std::vector<Matrix> frames;
};

// Tangent vectors are coordinates in the canonical orthonormal frame at base,
// i.e. the push forward by section(base) of a fixed orthonormal basis of p.
struct TangentVector {
  Point base;
  Vector coords;
  double norm = 0;
};

class FactorModel {
 public:
  virtual ~FactorModel() = default;
  virtual std::string name() const = 0;
  virtual int dim() const = 0;
  virtual int lie_size() const = 0;
  virtual const RootSystem& root_system() const = 0;
  int rank() const { return root_system().rank; }

  virtual Matrix basepoint() const = 0;
  virtual void validate_point(const Matrix& x) const = 0;
  virtual void validate_frame(const Matrix& k) const = 0;
  virtual double distance(const Matrix& x, const Matrix& y) const = 0;
  virtual Matrix section(const Matrix& x) const = 0;
  virtual Matrix act_point(const Matrix& g, const Matrix& x) const = 0;
  virtual Matrix act_frame(const Matrix& g, const Matrix& k) const = 0;
  virtual Matrix canonical_frame(const Matrix& k) const = 0;
  // element of K (lie matrix) carrying the base flag to k
  virtual Matrix frame_rotation(const Matrix& k) const = 0;
  virtual Matrix base_frame() const = 0;

  virtual Matrix p_matrix(const Vector& c) const = 0;
  virtual Vector p_coords(const Matrix& Z) const = 0;
  virtual std::vector<Matrix> k_basis() const = 0;
  virtual Vector embed_cartan(const Vector& a) const = 0;

  virtual Vector log_p(const Matrix& y) const = 0;
  virtual double busemann(const Matrix& x, const Matrix& k) const = 0;
  virtual Matrix limit_frame(const Vector& c) const = 0;
  virtual double flag_distance(const Matrix& k1, const Matrix& k2) const = 0;
  virtual Matrix random_frame(CounterRng& rng) const = 0;
  virtual Matrix random_isometry(CounterRng& rng) const = 0;
  virtual Matrix random_rotation(CounterRng& rng) const = 0;
  // chart representation of a tangent vector at x
  virtual Matrix chart_tangent(const Matrix& x, const Vector& c) const = 0;
  // section(x)^-1 applied to the flag k
  virtual Matrix pulled_frame(const Matrix& x, const Matrix& k) const { return act_frame(section(x).inverse(), k); }
  // distance from p beyond which points lose too much accuracy to be trusted
  virtual double numerical_horizon() const = 0;
};

std::shared_ptr<const FactorModel> make_spd_factor(int n);
std::shared_ptr<const FactorModel> make_hyperbolic_factor(int n);

class SymmetricSpace {
 public:
  explicit SymmetricSpace(std::vector<std::shared_ptr<const FactorModel>> factors);

  std::string name() const;
  int dim() const { return dim_; }
  int rank() const { return rs_.rank; }
  int lie_size() const { return lie_size_; }
  int factor_count() const { return static_cast<int>(factors_.size()); }
  const FactorModel& factor(int i) const { return *factors_[i]; }
  const std::shared_ptr<const FactorModel>& factor_ptr(int i) const { return factors_[i]; }
  int coord_offset(int i) const { return coord_off_[i]; }
  const RootSystem& root_system() const { return rs_; }
  const ChamberData& chamber() const { return cd_; }
  double entropy() const { return h_; }
  // Busemann weights h_i / h of the factors
  const std::vector<double>& weights() const { return w_; }

  Point basepoint() const;
  void validate(const Point& x) const;
  void validate(const FlagPoint& t) const;
  double distance(const Point& x, const Point& y) const;
  Point exp(const Point& x, const Vector& c) const;
  Vector log(const Point& x, const Point& y) const;

  Isometry identity() const;
  Isometry section(const Point& x) const;
  Isometry inverse(const Isometry& g) const;
  Isometry compose(const Isometry& a, const Isometry& b) const;
  Point act(const Isometry& g, const Point& x) const;
  FlagPoint act(const Isometry& g, const FlagPoint& t) const;
  // dg_x in canonical frames at x and g.x (orthogonal dim x dim matrix)
  Matrix differential(const Isometry& g, const Point& x) const;
  // Ad(k) on p coordinates for k in K
  Matrix rotation_matrix(const Isometry& k) const;
  Isometry exp_k(const Vector& coeffs) const;  // exp of sum coeffs_j K_j
  Isometry exp_p(const Vector& c) const;       // transvection exp(X_c)

  Matrix p_matrix(const Vector& c) const;
  Vector p_coords(const Matrix& Z) const;
  std::vector<Matrix> k_basis() const;
  Matrix p_basis_matrix(int j) const;
  // tangent coordinates at p of a vector of a (ambient root coordinates)
  Vector embed_cartan(const Vector& a) const;
  Matrix embed_cartan_subspace(const Matrix& cols) const;

  FlagPoint base_flag() const;
  FlagPoint canonical(const FlagPoint& t) const;
  double flag_distance(const FlagPoint& a, const FlagPoint& b) const;
  bool flag_equal(const FlagPoint& a, const FlagPoint& b, double tol = 1e-10) const;
  // K element carrying the base flag to t
  Isometry flag_rotation(const FlagPoint& t) const;
  // flag reached by the geodesic from p with initial direction c (regular c)
  FlagPoint limit_flag(const Vector& c) const;
  FlagPoint random_flag(CounterRng& rng) const;
  std::vector<FlagPoint> haar_flag_sample(int count, std::uint64_t seed) const;

  double busemann(const Point& x, const FlagPoint& t) const;
  // the flag seen from p after moving x to p by section(x)^-1
  FlagPoint pull_to_base(const Point& x, const FlagPoint& t) const;
  double numerical_horizon() const;
  TangentVector direction_to_boundary(const Point& x, const FlagPoint& t) const;
  Subspace flat_tangent(const Point& x, const FlagPoint& t) const;
  Matrix busemann_hessian(const Point& x, const FlagPoint& t) const;
  // (ad_X)^2 restricted to p, in coordinates
  Matrix ad_squared(const Vector& c) const;

  Point random_point(CounterRng& rng, double radius) const;
  Isometry random_isometry(CounterRng& rng) const;
  Isometry random_rotation(CounterRng& rng) const;
  std::vector<Matrix> chart_tangent(const Point& x, const Vector& c) const;

 private:
  std::vector<std::shared_ptr<const FactorModel>> factors_;
  RootSystem rs_;
  ChamberData cd_;
  double h_ = 0;
  std::vector<double> w_;
  std::vector<int> coord_off_, lie_off_, amb_off_;
  int dim_ = 0, lie_size_ = 0;

  Vector factor_coords(const Vector& c, int i) const { return c.segment(coord_off_[i], factors_[i]->dim()); }
  Matrix block_diag(const std::vector<Matrix>& blocks) const;
  std::vector<Matrix> split_blocks(const Matrix& M) const;
};

// "spd:3", "hyp:4", products as comma lists "hyp:2,hyp:2"
std::shared_ptr<const SymmetricSpace> make_space(const std::string& spec);

}  // namespace hrdeg
