#include "hrdeg/jacobian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hrdeg {

double sym_det(const Matrix& S) {
  if (S.rows() == 0) return 1;
  Vector ev = sym_eigen(symmetrize(S)).values;
  double d = 1;
  for (int i = 0; i < ev.size(); ++i) d *= ev(i);
  return d;
}

JacobianData assemble(const SymmetricSpace& m, const Point& x, const BoundaryMeasure& sigma) {
  sigma.validate();
  const int n = m.dim();
  JacobianData d;
  d.Q1 = Matrix::Zero(n, n);
  d.Q2 = Matrix::Zero(n, n);
  d.Hess = Matrix::Zero(n, n);
  for (int i = 0; i < sigma.size(); ++i) {
    const double w = sigma.weights[i];
    Vector v = m.direction_to_boundary(x, sigma.atoms[i]).coords;
    d.Q1 += w * v * v.transpose();
    Subspace F = m.flat_tangent(x, sigma.atoms[i]);
    d.Q2 += w * (Matrix::Identity(n, n) - F.projector());
    d.Hess += w * m.busemann_hessian(x, sigma.atoms[i]);
  }
  d.Q1 = symmetrize(d.Q1);
  d.Q2 = symmetrize(d.Q2);
  d.Hess = symmetrize(d.Hess);
  d.L = sym_eigen(d.Q2).values;
  d.det_q1 = sym_det(d.Q1);
  d.det_q2 = d.L.prod();
  d.det_hess = sym_det(d.Hess);
  d.ratio = d.det_hess > 0 ? std::sqrt(std::max(0.0, d.det_q1)) / d.det_hess : std::numeric_limits<double>::infinity();
  d.simplified_ratio = d.det_q2 != 0 ? d.det_q1 / (d.det_q2 * d.det_q2) : std::numeric_limits<double>::infinity();
  return d;
}

std::string to_string(BoundStatus s) { return s == BoundStatus::Ok ? "OK" : "DEGENERATE"; }

BoundValue jacobian_bound_inputs(const SymmetricSpace& m, double s, const JacobianData& data) {
  if (!(s > 0)) throw std::invalid_argument("s must be positive");
  Vector ev = sym_eigen(data.Hess).values;
  const int n = m.dim();
  BoundValue out;
  if (ev(0) <= kKernelRelTol * std::max(1.0, ev(n - 1))) {
    out.status = BoundStatus::Degenerate;
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }
  out.value = std::pow(s / std::sqrt(static_cast<double>(n)), n) * std::sqrt(std::max(0.0, data.det_q1)) / data.det_hess;
  return out;
}

BoundReport small_eigen_census(const JacobianData& data, int rank) {
  BoundReport r;
  r.epsilon = 1.0 / (rank + 1);
  r.L = data.L;
  for (int i = 0; i < data.L.size(); ++i) {
    if (data.L(i) < r.epsilon) ++r.k;
    if (data.L(i) <= 1e-12) r.all_positive = false;
  }
  r.k_within_rank = r.k <= rank;
  return r;
}

BoundaryMeasure degeneration_measure(const SymmetricSpace& m, double eps, int haar_atoms, std::uint64_t seed, double c0) {
  if (m.factor_count() != 1 || m.factor(0).name().rfind("spd:", 0) != 0)
    throw std::invalid_argument("the degeneration family is defined on SPD(n)");
  if (!(eps >= 0) || c0 * eps >= 1) throw std::invalid_argument("perturbation scale out of range");
  FlagPoint a = m.base_flag();
  FlagPoint b = a;
  b.frames[0].col(0).swap(b.frames[0].col(1));
  std::vector<FlagPoint> atoms{a, b};
  std::vector<double> w{(1 - c0 * eps) / 2, (1 - c0 * eps) / 2};
  if (eps > 0) {
    for (auto& t : m.haar_flag_sample(haar_atoms, seed)) {
      atoms.push_back(t);
      w.push_back(c0 * eps / haar_atoms);
    }
  }
  return make_measure(std::move(atoms), std::move(w));
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("slope fit needs at least two points");
  double mx = 0, my = 0;
  const double k = static_cast<double>(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]) / k;
    my += std::log(y[i]) / k;
  }
  double sxy = 0, sxx = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

DegenerationTable degeneration_experiment(const SymmetricSpace& m, const std::vector<double>& epsilons, int haar_atoms,
                                          std::uint64_t seed, double c0) {
  DegenerationTable t;
  t.model = m.name();
  t.haar_atoms = haar_atoms;
  t.c0 = c0;
  Point p = m.basepoint();
  std::vector<double> e, q1, q2, r;
  for (double eps : epsilons) {
    JacobianData d = assemble(m, p, degeneration_measure(m, eps, haar_atoms, seed, c0));
    t.rows.push_back({eps, d.det_q1, d.det_q2, d.det_hess, d.ratio, d.simplified_ratio});
    e.push_back(eps);
    q1.push_back(std::abs(d.det_q1));
    q2.push_back(std::abs(d.det_q2));
    r.push_back(std::abs(d.simplified_ratio));
  }
  if (e.size() >= 2) {
    t.slope_q1 = loglog_slope(e, q1);
    t.slope_q2 = loglog_slope(e, q2);
    t.slope_ratio = loglog_slope(e, r);
    t.ratio_spread = *std::max_element(r.begin(), r.end()) / *std::min_element(r.begin(), r.end());
  }
  JacobianData lim = assemble(m, p, degeneration_measure(m, 0, haar_atoms, seed, c0));
  const int n = m.dim();
  t.limit_kernel_q1 = n - numerical_rank(lim.Q1);
  t.limit_kernel_q2 = n - numerical_rank(lim.Q2);
  t.limit_kernel_hess = n - numerical_rank(lim.Hess);
  return t;
}

ProductSplitReport product_split_check(const SymmetricSpace& m, const Point& x, const BoundaryMeasure& sigma) {
  if (m.factor_count() < 2) throw std::invalid_argument("product split needs at least two factors");
  ProductSplitReport r;
  JacobianData d = assemble(m, x, sigma);
  r.det_q1 = d.det_q1;
  r.det_hess = d.det_hess;
  r.det_q1_factors = 1;
  r.det_hess_factors = 1;
  for (int i = 0; i < m.factor_count(); ++i) {
    SymmetricSpace fi({m.factor_ptr(i)});
    BoundaryMeasure marg;
    marg.weights = sigma.weights;
    for (auto& t : sigma.atoms) marg.atoms.push_back(FlagPoint{{t.frames[i]}});
    JacobianData di = assemble(fi, Point{{x.factors[i]}}, marg);
    // B = sum w_i B_i: the dB block picks up w_i, the Hessian block w_i
    const double w = m.weights()[i];
    const int ni = fi.dim();
    r.det_q1_factors *= std::pow(w, 2 * ni) * di.det_q1;
    r.det_hess_factors *= std::pow(w, ni) * di.det_hess;
  }
  r.schur_ok = r.det_q1 <= r.det_q1_factors * (1 + 1e-9) + 1e-300;
  r.hess_ok = std::abs(r.det_hess - r.det_hess_factors) <= 1e-9 * std::max(std::abs(r.det_hess_factors), 1e-300);
  return r;
}

DetsumReport detsum_monotonicity_check(int dim, int trials, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  DetsumReport r;
  r.trials = trials;
  CounterRng base(seed, 0x44657473);
  for (int t = 0; t < trials; ++t) {
    CounterRng rng = base.split(t);
    int count = 1 + static_cast<int>(rng() % 4);
    std::vector<Matrix> parts;
    Matrix S = Matrix::Zero(dim, dim);
    for (int j = 0; j < count; ++j) {
      int rk = 1 + static_cast<int>(rng() % dim);
      Matrix G = rng.normal_matrix(dim, rk);
      parts.push_back(G * G.transpose());
      S += parts.back();
    }
    int j = static_cast<int>(rng() % count);
    SymEigen e = sym_eigen(parts[j]);
    int which = static_cast<int>(rng() % dim);
    double delta = rng.uniform(0.01, 1.0);
    Vector u = e.vectors.col(which);
    Matrix S2 = S + delta * u * u.transpose();
    double d0 = S.determinant(), d1 = S2.determinant();
    double scale = std::max(1.0, std::abs(d0));
    if (d1 < d0 - 1e-10 * scale) ++r.violations;
    if (sym_eigen(S).values(0) > 1e-8 * std::max(1.0, S.norm())) {
      ++r.strict_checks;
      if (!(d1 > d0)) ++r.strict_violations;
    }
  }
  return r;
}

DegreeFactor degree_factor(const FactorModel& f, double matching_constant, double metric_scale) {
  if (!(metric_scale > 0)) throw std::invalid_argument("metric scale must be positive");
  DegreeFactor d;
  d.rs = metric_scale == 1 ? f.root_system() : rescaled(f.root_system(), metric_scale * metric_scale);
  d.dim = f.dim();
  d.matching_constant = matching_constant;
  return d;
}

namespace {

bool all_ones(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int m) { return m == 1; });
}

}  // namespace

double degree_constant(const std::vector<DegreeFactor>& factors, double s) {
  if (factors.empty()) throw std::invalid_argument("no factors");
  if (!(s > 0)) throw std::invalid_argument("s must be positive");
  int n = 0;
  for (auto& f : factors) {
    if (f.rs.rank == 1 && f.dim == 2)
      throw ExcludedFactorError("H^2 factors are excluded from the degree estimate");
    if (f.rs.family == "A2" && all_ones(f.rs.multiplicities))
      throw ExcludedFactorError("SL(3,R)/SO(3) factors are excluded from the degree estimate");
    if (!(f.matching_constant > 0)) throw std::invalid_argument("matching constants must be positive");
    n += f.dim;
  }
  // accumulate in logs: the individual pieces overflow quickly
  double lg = -0.5 * n * std::log(static_cast<double>(n)) + n * std::log(s);
  for (auto& f : factors) {
    ChamberData cd = default_chamber(f.rs);
    double c = eigenvalue_bounds(f.rs, cd);
    double h = entropy(f.rs, cd);
    lg += 0.5 * f.rs.rank * std::log(f.matching_constant) + f.dim * std::log(c) + f.dim * std::log(f.rs.rank + 1.0);
    lg -= n * std::log(h);
  }
  return std::exp(lg);
}

}  // namespace hrdeg
