#include "hrdeg/spaces.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hrdeg {

namespace {

Matrix bracket(const Matrix& A, const Matrix& B) { return A * B - B * A; }

// Ad(k) applied to a p vector of one factor
Vector rotate(const FactorModel& f, const Matrix& k, const Vector& c) {
  return f.p_coords(k * f.p_matrix(c) * k.inverse());
}

}  // namespace

SymmetricSpace::SymmetricSpace(std::vector<std::shared_ptr<const FactorModel>> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("a model needs at least one factor");
  std::vector<RootSystem> parts;
  for (auto& f : factors_) {
    coord_off_.push_back(dim_);
    lie_off_.push_back(lie_size_);
    amb_off_.push_back(parts.empty() ? 0 : amb_off_.back() + parts.back().ambient_dim);
    dim_ += f->dim();
    lie_size_ += f->lie_size();
    parts.push_back(f->root_system());
  }
  rs_ = direct_sum(parts);
  cd_ = default_chamber(rs_);
  h_ = hrdeg::entropy(rs_, cd_);
  for (auto& f : factors_) {
    const RootSystem& r = f->root_system();
    w_.push_back(hrdeg::entropy(r, default_chamber(r)) / h_);
  }
}

std::string SymmetricSpace::name() const {
  std::string s;
  for (auto& f : factors_) s += (s.empty() ? "" : ",") + f->name();
  return s;
}

Matrix SymmetricSpace::block_diag(const std::vector<Matrix>& blocks) const {
  Matrix M = Matrix::Zero(lie_size_, lie_size_);
  for (int i = 0; i < factor_count(); ++i) {
    int s = factors_[i]->lie_size();
    M.block(lie_off_[i], lie_off_[i], s, s) = blocks[i];
  }
  return M;
}

std::vector<Matrix> SymmetricSpace::split_blocks(const Matrix& M) const {
  std::vector<Matrix> out;
  for (int i = 0; i < factor_count(); ++i) {
    int s = factors_[i]->lie_size();
    out.push_back(M.block(lie_off_[i], lie_off_[i], s, s));
  }
  return out;
}

Point SymmetricSpace::basepoint() const {
  Point p;
  for (auto& f : factors_) p.factors.push_back(f->basepoint());
  return p;
}

void SymmetricSpace::validate(const Point& x) const {
  if (static_cast<int>(x.factors.size()) != factor_count()) throw std::invalid_argument("point has wrong factor count");
  for (int i = 0; i < factor_count(); ++i) factors_[i]->validate_point(x.factors[i]);
}

void SymmetricSpace::validate(const FlagPoint& t) const {
  if (static_cast<int>(t.frames.size()) != factor_count()) throw std::invalid_argument("flag has wrong factor count");
  for (int i = 0; i < factor_count(); ++i) factors_[i]->validate_frame(t.frames[i]);
}

double SymmetricSpace::distance(const Point& x, const Point& y) const {
  validate(x);
  validate(y);
  double s = 0;
  for (int i = 0; i < factor_count(); ++i) {
    double d = factors_[i]->distance(x.factors[i], y.factors[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

Point SymmetricSpace::exp(const Point& x, const Vector& c) const {
  if (c.size() != dim_) throw std::invalid_argument("tangent vector has wrong dimension");
  Point y;
  for (int i = 0; i < factor_count(); ++i) {
    const FactorModel& f = *factors_[i];
    Matrix e = mat_exp(f.p_matrix(factor_coords(c, i)));
    y.factors.push_back(f.act_point(f.section(x.factors[i]), f.act_point(e, f.basepoint())));
  }
  return y;
}

Vector SymmetricSpace::log(const Point& x, const Point& y) const {
  Vector c(dim_);
  for (int i = 0; i < factor_count(); ++i) {
    const FactorModel& f = *factors_[i];
    Matrix gi = f.section(x.factors[i]).inverse();
    c.segment(coord_off_[i], f.dim()) = f.log_p(f.act_point(gi, y.factors[i]));
  }
  return c;
}

Isometry SymmetricSpace::identity() const {
  Isometry g;
  for (auto& f : factors_) g.factors.push_back(Matrix::Identity(f->lie_size(), f->lie_size()));
  return g;
}

Isometry SymmetricSpace::section(const Point& x) const {
  Isometry g;
  for (int i = 0; i < factor_count(); ++i) g.factors.push_back(factors_[i]->section(x.factors[i]));
  return g;
}

Isometry SymmetricSpace::inverse(const Isometry& g) const {
  Isometry out;
  for (auto& m : g.factors) out.factors.push_back(m.inverse());
  return out;
}

Isometry SymmetricSpace::compose(const Isometry& a, const Isometry& b) const {
  Isometry out;
  for (int i = 0; i < factor_count(); ++i) out.factors.push_back(a.factors[i] * b.factors[i]);
  return out;
}

Point SymmetricSpace::act(const Isometry& g, const Point& x) const {
  Point y;
  for (int i = 0; i < factor_count(); ++i) y.factors.push_back(factors_[i]->act_point(g.factors[i], x.factors[i]));
  return y;
}

FlagPoint SymmetricSpace::act(const Isometry& g, const FlagPoint& t) const {
  FlagPoint out;
  for (int i = 0; i < factor_count(); ++i) out.frames.push_back(factors_[i]->act_frame(g.factors[i], t.frames[i]));
  return out;
}

Matrix SymmetricSpace::rotation_matrix(const Isometry& k) const {
  Matrix R = Matrix::Zero(dim_, dim_);
  for (int i = 0; i < factor_count(); ++i) {
    const FactorModel& f = *factors_[i];
    for (int j = 0; j < f.dim(); ++j) {
      Vector e = Vector::Unit(f.dim(), j);
      R.block(coord_off_[i], coord_off_[i] + j, f.dim(), 1) = rotate(f, k.factors[i], e);
    }
  }
  return R;
}

Matrix SymmetricSpace::differential(const Isometry& g, const Point& x) const {
  Point gx = act(g, x);
  Isometry k = compose(inverse(section(gx)), compose(g, section(x)));
  return rotation_matrix(k);
}

Isometry SymmetricSpace::exp_k(const Vector& coeffs) const {
  Isometry out;
  int off = 0;
  for (auto& f : factors_) {
    auto kb = f->k_basis();
    Matrix Z = Matrix::Zero(f->lie_size(), f->lie_size());
    for (size_t j = 0; j < kb.size(); ++j) Z += coeffs(off + j) * kb[j];
    off += static_cast<int>(kb.size());
    out.factors.push_back(mat_exp(Z));
  }
  if (off != coeffs.size()) throw std::invalid_argument("k coefficient vector has wrong size");
  return out;
}

Isometry SymmetricSpace::exp_p(const Vector& c) const {
  Isometry out;
  for (int i = 0; i < factor_count(); ++i)
    out.factors.push_back(mat_exp(factors_[i]->p_matrix(factor_coords(c, i))));
  return out;
}

Matrix SymmetricSpace::p_matrix(const Vector& c) const {
  std::vector<Matrix> b;
  for (int i = 0; i < factor_count(); ++i) b.push_back(factors_[i]->p_matrix(factor_coords(c, i)));
  return block_diag(b);
}

Vector SymmetricSpace::p_coords(const Matrix& Z) const {
  auto b = split_blocks(Z);
  Vector c(dim_);
  for (int i = 0; i < factor_count(); ++i) c.segment(coord_off_[i], factors_[i]->dim()) = factors_[i]->p_coords(b[i]);
  return c;
}

std::vector<Matrix> SymmetricSpace::k_basis() const {
  std::vector<Matrix> out;
  for (int i = 0; i < factor_count(); ++i)
    for (const Matrix& K : factors_[i]->k_basis()) {
      std::vector<Matrix> b;
      for (int j = 0; j < factor_count(); ++j)
        b.push_back(j == i ? K : Matrix::Zero(factors_[j]->lie_size(), factors_[j]->lie_size()));
      out.push_back(block_diag(b));
    }
  return out;
}

Matrix SymmetricSpace::p_basis_matrix(int j) const { return p_matrix(Vector::Unit(dim_, j)); }

Vector SymmetricSpace::embed_cartan(const Vector& a) const {
  if (a.size() != rs_.ambient_dim) throw std::invalid_argument("cartan vector has wrong dimension");
  Vector c(dim_);
  for (int i = 0; i < factor_count(); ++i) {
    const FactorModel& f = *factors_[i];
    c.segment(coord_off_[i], f.dim()) = f.embed_cartan(a.segment(amb_off_[i], f.root_system().ambient_dim));
  }
  return c;
}

Matrix SymmetricSpace::embed_cartan_subspace(const Matrix& cols) const {
  Matrix out(dim_, cols.cols());
  for (int j = 0; j < cols.cols(); ++j) out.col(j) = embed_cartan(cols.col(j));
  return out;
}

FlagPoint SymmetricSpace::base_flag() const {
  FlagPoint t;
  for (auto& f : factors_) t.frames.push_back(f->base_frame());
  return t;
}

FlagPoint SymmetricSpace::canonical(const FlagPoint& t) const {
  FlagPoint out;
  for (int i = 0; i < factor_count(); ++i) out.frames.push_back(factors_[i]->canonical_frame(t.frames[i]));
  return out;
}

double SymmetricSpace::flag_distance(const FlagPoint& a, const FlagPoint& b) const {
  double d = 0;
  for (int i = 0; i < factor_count(); ++i) d = std::max(d, factors_[i]->flag_distance(a.frames[i], b.frames[i]));
  return d;
}

bool SymmetricSpace::flag_equal(const FlagPoint& a, const FlagPoint& b, double tol) const {
  return flag_distance(a, b) <= tol;
}

Isometry SymmetricSpace::flag_rotation(const FlagPoint& t) const {
  Isometry k;
  for (int i = 0; i < factor_count(); ++i) k.factors.push_back(factors_[i]->frame_rotation(t.frames[i]));
  return k;
}

FlagPoint SymmetricSpace::limit_flag(const Vector& c) const {
  FlagPoint t;
  for (int i = 0; i < factor_count(); ++i) t.frames.push_back(factors_[i]->limit_frame(factor_coords(c, i)));
  return t;
}

FlagPoint SymmetricSpace::random_flag(CounterRng& rng) const {
  FlagPoint t;
  for (auto& f : factors_) t.frames.push_back(f->random_frame(rng));
  return t;
}

std::vector<FlagPoint> SymmetricSpace::haar_flag_sample(int count, std::uint64_t seed) const {
  if (count < 1) throw std::invalid_argument("sample count must be positive");
  CounterRng base(seed, 0x48616172ULL);
  std::vector<FlagPoint> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    CounterRng r = base.split(static_cast<std::uint64_t>(i));
    out.push_back(random_flag(r));
  }
  return out;
}

double SymmetricSpace::busemann(const Point& x, const FlagPoint& t) const {
  double b = 0;
  for (int i = 0; i < factor_count(); ++i) b += w_[i] * factors_[i]->busemann(x.factors[i], t.frames[i]);
  return b;
}

FlagPoint SymmetricSpace::pull_to_base(const Point& x, const FlagPoint& t) const {
  FlagPoint out;
  for (int i = 0; i < factor_count(); ++i) out.frames.push_back(factors_[i]->pulled_frame(x.factors[i], t.frames[i]));
  return out;
}

double SymmetricSpace::numerical_horizon() const {
  double h = std::numeric_limits<double>::infinity();
  for (auto& f : factors_) h = std::min(h, f->numerical_horizon());
  return h;
}

TangentVector SymmetricSpace::direction_to_boundary(const Point& x, const FlagPoint& t) const {
  // pull the flag back to p, rotate b+ into it
  Isometry k = flag_rotation(pull_to_base(x, t));
  Vector b = embed_cartan(cd_.unit_barycenter);
  Vector c(dim_);
  for (int i = 0; i < factor_count(); ++i)
    c.segment(coord_off_[i], factors_[i]->dim()) = rotate(*factors_[i], k.factors[i], factor_coords(b, i));
  return {x, c, c.norm()};
}

Subspace SymmetricSpace::flat_tangent(const Point& x, const FlagPoint& t) const {
  Isometry k = flag_rotation(pull_to_base(x, t));
  Matrix A = embed_cartan_subspace(rs_.cartan_basis());
  Matrix out(dim_, A.cols());
  for (int j = 0; j < A.cols(); ++j)
    for (int i = 0; i < factor_count(); ++i)
      out.block(coord_off_[i], j, factors_[i]->dim(), 1) = rotate(*factors_[i], k.factors[i], factor_coords(A.col(j), i));
  return Subspace::span(out, dim_);
}

Matrix SymmetricSpace::ad_squared(const Vector& c) const {
  Matrix M = Matrix::Zero(dim_, dim_);
  for (int i = 0; i < factor_count(); ++i) {
    const FactorModel& f = *factors_[i];
    Matrix X = f.p_matrix(factor_coords(c, i));
    for (int j = 0; j < f.dim(); ++j) {
      Matrix E = f.p_matrix(Vector::Unit(f.dim(), j));
      M.block(coord_off_[i], coord_off_[i] + j, f.dim(), 1) = f.p_coords(bracket(X, bracket(X, E)));
    }
  }
  return symmetrize(M);
}

Matrix SymmetricSpace::busemann_hessian(const Point& x, const FlagPoint& t) const {
  // DdB = sqrt(-R(v,.,v,.)) = sqrt((ad_v)^2 on p)
  Vector v = direction_to_boundary(x, t).coords;
  SymEigen e = sym_eigen(ad_squared(v));
  double top = e.values.cwiseAbs().maxCoeff();
  // rounding on the flat directions would otherwise leak through the square root
  Vector s = e.values.unaryExpr([&](double l) { return l > kKernelRelTol * top ? std::sqrt(l) : 0.0; });
  return symmetrize(e.vectors * s.asDiagonal() * e.vectors.transpose());
}

Point SymmetricSpace::random_point(CounterRng& rng, double radius) const {
  Vector c = random_unit(rng, dim_) * (radius * rng.uniform());
  return exp(basepoint(), c);
}

Isometry SymmetricSpace::random_isometry(CounterRng& rng) const {
  Isometry g;
  for (auto& f : factors_) g.factors.push_back(f->random_isometry(rng));
  return g;
}

Isometry SymmetricSpace::random_rotation(CounterRng& rng) const {
  Isometry g;
  for (auto& f : factors_) g.factors.push_back(f->random_rotation(rng));
  return g;
}

std::vector<Matrix> SymmetricSpace::chart_tangent(const Point& x, const Vector& c) const {
  std::vector<Matrix> out;
  for (int i = 0; i < factor_count(); ++i) out.push_back(factors_[i]->chart_tangent(x.factors[i], factor_coords(c, i)));
  return out;
}

std::shared_ptr<const SymmetricSpace> make_space(const std::string& spec) {
  std::vector<std::shared_ptr<const FactorModel>> fs;
  std::stringstream ss(spec);
  std::string item;
  if (!spec.empty() && spec.back() == ',') throw std::invalid_argument("model spec ends with ','");
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad model spec '" + item + "' (expected family:n)");
    std::string fam = item.substr(0, colon), num = item.substr(colon + 1);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad dimension in model spec '" + item + "'");
    int n = std::stoi(num);
    if (fam == "spd")
      fs.push_back(make_spd_factor(n));
    else if (fam == "hyp")
      fs.push_back(make_hyperbolic_factor(n));
    else
      throw std::invalid_argument("unknown model family '" + fam + "' (expected spd or hyp)");
  }
  if (fs.empty()) throw std::invalid_argument("empty model spec");
  return std::make_shared<SymmetricSpace>(std::move(fs));
}

}  // namespace hrdeg
