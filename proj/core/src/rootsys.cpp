#include "hrdeg/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <regex>
#include <set>
#include <stdexcept>

namespace hrdeg {

namespace {

using IVec = std::vector<long long>;

IVec unit(int d, int i, long long s = 1) {
  IVec v(d, 0);
  v[i] = s;
  return v;
}

IVec add(IVec a, const IVec& b, long long s = 1) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

IVec neg(IVec a) {
  for (auto& x : a) x = -x;
  return a;
}

struct RawSystem {
  std::vector<IVec> roots;
  int dim = 0;
};

RawSystem raw_roots(char kind, int r) {
  RawSystem s;
  auto push_pm = [&](const IVec& v) {
    s.roots.push_back(v);
    s.roots.push_back(neg(v));
  };
  switch (kind) {
    case 'A':
      s.dim = r + 1;
      for (int i = 0; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) push_pm(add(unit(s.dim, i), unit(s.dim, j), -1));
      break;
    case 'B':
    case 'C':
    case 'D':
      s.dim = r;
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
          push_pm(add(unit(r, i), unit(r, j), -1));
          push_pm(add(unit(r, i), unit(r, j), 1));
        }
      if (kind == 'B')
        for (int i = 0; i < r; ++i) push_pm(unit(r, i));
      if (kind == 'C')
        for (int i = 0; i < r; ++i) push_pm(unit(r, i, 2));
      break;
    case 'G':
      s.dim = 3;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) push_pm(add(unit(3, i), unit(3, j), -1));
      for (int i = 0; i < 3; ++i) {
        IVec v(3, -1);
        v[i] = 2;
        push_pm(v);
      }
      break;
    default:
      throw std::invalid_argument("unsupported root system family");
  }
  return s;
}

long long sqlen(const IVec& v) {
  long long s = 0;
  for (long long x : v) s += x * x;
  return s;
}

}  // namespace

Vector RootSystem::root(int i) const {
  Vector v(ambient_dim);
  for (int k = 0; k < ambient_dim; ++k) v(k) = static_cast<double>(roots[i][k]);
  return v;
}

Vector RootSystem::dual(int i) const { return gram.ldlt().solve(root(i)); }

double RootSystem::norm(const Vector& a) const { return std::sqrt(std::max(0.0, inner(a, a))); }

int RootSystem::negative_of(int i) const {
  IVec n = neg(roots[i]);
  for (int j = 0; j < size(); ++j)
    if (roots[j] == n) return j;
  return -1;
}

Matrix RootSystem::cartan_basis() const {
  Matrix H(ambient_dim, size());
  for (int i = 0; i < size(); ++i) H.col(i) = dual(i);
  Eigen::LLT<Matrix> llt(gram);
  Matrix L = llt.matrixL();  // gram = L Lᵀ, so Lᵀ maps to euclidean coordinates
  Matrix E = L.transpose() * H;
  Subspace S = Subspace::span(E, ambient_dim);
  return L.transpose().triangularView<Eigen::Upper>().solve(S.basis());
}

RootSystem build_root_system(const std::string& family, const std::vector<int>& profile) {
  std::smatch m;
  static const std::regex re("^(A|B|C|D|BC|G)([0-9]+)$");
  if (!std::regex_match(family, m, re))
    throw std::invalid_argument("unsupported root system family '" + family + "'");
  const std::string kind = m[1];
  const int r = std::stoi(m[2]);
  if (r < 1 || r > 6) throw std::invalid_argument("root system rank must be in 1..6");
  if (profile.empty()) throw std::invalid_argument("empty multiplicity profile");

  RootSystem rs;
  rs.family = family;

  if (kind == "BC") {
    if (r != 1) throw std::invalid_argument("only BC1 is supported among BC families");
    int ma = profile[0], m2a = profile.size() > 1 ? profile[1] : 0;
    if (ma <= 0 || m2a < 0 || profile.size() > 2)
      throw std::invalid_argument("BC1 profile must be (m_alpha > 0[, m_2alpha >= 0])");
    rs.ambient_dim = 1;
    rs.roots = {{1}, {-1}};
    rs.multiplicities = {ma, ma};
    if (m2a > 0) {
      rs.roots.push_back({2});
      rs.roots.push_back({-2});
      rs.multiplicities.push_back(m2a);
      rs.multiplicities.push_back(m2a);
    }
  } else {
    if (kind == "G" && r != 2) throw std::invalid_argument("G family exists only in rank 2");
    if ((kind == "B" || kind == "C") && r < 2) throw std::invalid_argument("B/C families need rank >= 2");
    if (kind == "D" && r < 3) throw std::invalid_argument("D family needs rank >= 3");
    RawSystem raw = raw_roots(kind[0], r);
    rs.ambient_dim = raw.dim;
    rs.roots = raw.roots;
    std::set<long long> lens;
    for (auto& v : raw.roots) lens.insert(sqlen(v));
    std::vector<long long> lv(lens.begin(), lens.end());
    if (profile.size() != 1 && profile.size() != lv.size())
      throw std::invalid_argument("multiplicity profile needs 1 or " + std::to_string(lv.size()) + " entries");
    for (int p : profile)
      if (p <= 0) throw std::invalid_argument("multiplicities must be positive");
    for (auto& v : raw.roots) {
      size_t li = std::find(lv.begin(), lv.end(), sqlen(v)) - lv.begin();
      rs.multiplicities.push_back(profile.size() == 1 ? profile[0] : profile[li]);
    }
  }
  rs.gram = Matrix::Identity(rs.ambient_dim, rs.ambient_dim);
  rs.factor_of_coord.assign(rs.ambient_dim, 0);
  rs.rank = integer_rank(rs.roots);
  validate_root_system(rs);
  return rs;
}

RootSystem direct_sum(const std::vector<RootSystem>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty direct sum");
  if (parts.size() == 1) return parts[0];
  RootSystem out;
  int d = 0;
  for (auto& p : parts) d += p.ambient_dim;
  out.ambient_dim = d;
  out.gram = Matrix::Zero(d, d);
  int off = 0, factor = 0;
  for (auto& p : parts) {
    if (!out.family.empty()) out.family += "+";
    out.family += p.family;
    out.rank += p.rank;
    out.gram.block(off, off, p.ambient_dim, p.ambient_dim) = p.gram;
    int maxf = 0;
    for (int f : p.factor_of_coord) {
      out.factor_of_coord.push_back(factor + f);
      maxf = std::max(maxf, f);
    }
    for (int i = 0; i < p.size(); ++i) {
      IVec v(d, 0);
      for (int k = 0; k < p.ambient_dim; ++k) v[off + k] = p.roots[i][k];
      out.roots.push_back(v);
      out.multiplicities.push_back(p.multiplicities[i]);
    }
    off += p.ambient_dim;
    factor += maxf + 1;
  }
  validate_root_system(out);
  return out;
}

RootSystem rescaled(const RootSystem& rs, double factor) {
  if (!(factor > 0)) throw std::invalid_argument("scale factor must be positive");
  RootSystem out = rs;
  out.gram *= factor;
  return out;
}

void validate_root_system(const RootSystem& rs) {
  if (rs.roots.empty()) throw std::invalid_argument("root system has no roots");
  if (rs.multiplicities.size() != rs.roots.size())
    throw std::invalid_argument("multiplicity count does not match root count");
  Eigen::LLT<Matrix> llt(rs.gram);
  if (llt.info() != Eigen::Success || !is_symmetric(rs.gram))
    throw std::invalid_argument("inner product is not positive definite");
  std::map<IVec, int> index;
  for (int i = 0; i < rs.size(); ++i) {
    if (static_cast<int>(rs.roots[i].size()) != rs.ambient_dim)
      throw std::invalid_argument("root has wrong ambient dimension");
    if (sqlen(rs.roots[i]) == 0) throw std::invalid_argument("zero root");
    if (rs.multiplicities[i] <= 0) throw std::invalid_argument("multiplicity must be positive");
    if (!index.emplace(rs.roots[i], i).second) throw std::invalid_argument("duplicate root");
  }
  Matrix Ginv = rs.gram.inverse();
  for (int i = 0; i < rs.size(); ++i) {
    int n = rs.negative_of(i);
    if (n < 0) throw std::invalid_argument("roots not closed under negation");
    if (rs.multiplicities[n] != rs.multiplicities[i])
      throw std::invalid_argument("multiplicity of -alpha differs from alpha");
    Vector a = rs.root(i);
    double aa = a.dot(Ginv * a);
    for (int j = 0; j < rs.size(); ++j) {
      Vector b = rs.root(j);
      double c = 2 * b.dot(Ginv * a) / aa;
      long long ci = std::llround(c);
      if (std::abs(c - static_cast<double>(ci)) > 1e-9)
        throw std::invalid_argument("cartan integer is not an integer");
      IVec refl = add(rs.roots[j], rs.roots[i], -ci);
      if (!index.count(refl)) throw std::invalid_argument("roots not closed under reflections");
    }
  }
}

Vector default_regular_direction(const RootSystem& rs) {
  // strictly decreasing, well separated coordinates are regular for every family here
  Vector A(rs.ambient_dim);
  int off = 0;
  while (off < rs.ambient_dim) {
    int f = rs.factor_of_coord[off], len = 0;
    while (off + len < rs.ambient_dim && rs.factor_of_coord[off + len] == f) ++len;
    bool sum_zero = true;  // A_r and G_2 live in a sum-zero hyperplane
    for (const auto& r : rs.roots) {
      long long s = 0;
      for (int k = 0; k < len; ++k) s += r[off + k];
      if (s != 0) sum_zero = false;
    }
    // small tilt on the last coordinate: (2,0,-2) is singular for G_2
    for (int k = 0; k < len; ++k)
      A(off + k) = sum_zero ? static_cast<double>(len - 1 - 2 * k) - (k == len - 1 && len == 3 ? 0.1 : 0.0)
                            : static_cast<double>(len - k);
    off += len;
  }
  return A;
}

ChamberData default_chamber(const RootSystem& rs) { return chamber(rs, default_regular_direction(rs)); }

ChamberData chamber(const RootSystem& rs, const Vector& A_in) {
  if (A_in.size() != rs.ambient_dim) throw std::invalid_argument("direction has wrong dimension");
  Matrix C = rs.cartan_basis();
  Vector A = C * (C.transpose() * rs.gram * A_in);  // orthogonal projection onto a
  double An = rs.norm(A);
  if (An == 0) throw std::invalid_argument("direction is singular (zero in a)");
  Matrix Ginv = rs.gram.inverse();
  ChamberData cd;
  cd.direction = A;
  for (int i = 0; i < rs.size(); ++i) {
    Vector a = rs.root(i);
    double v = a.dot(A), an = std::sqrt(a.dot(Ginv * a));
    if (std::abs(v) < 1e-10 * an * An) throw std::invalid_argument("direction is singular for root system");
    if (v > 0) cd.positive_roots.push_back(i);
  }
  std::set<IVec> pos;
  for (int i : cd.positive_roots) pos.insert(rs.roots[i]);
  for (int i : cd.positive_roots) {
    bool decomposable = false;
    for (int j : cd.positive_roots)
      if (pos.count(add(rs.roots[i], rs.roots[j], -1))) decomposable = true;
    if (!decomposable) cd.simple_roots.push_back(i);
  }
  if (static_cast<int>(cd.simple_roots.size()) != rs.rank)
    throw std::logic_error("simple root count differs from rank");
  // every positive root is a nonnegative integer combination of simple roots
  Matrix S(rs.ambient_dim, rs.rank);
  for (int k = 0; k < rs.rank; ++k) S.col(k) = rs.root(cd.simple_roots[k]);
  auto solver = S.colPivHouseholderQr();
  for (int i : cd.positive_roots) {
    Vector c = solver.solve(rs.root(i));
    if ((S * c - rs.root(i)).norm() > 1e-9) throw std::logic_error("simple roots do not span");
    for (int k = 0; k < c.size(); ++k)
      if (c(k) < -1e-9 || std::abs(c(k) - std::round(c(k))) > 1e-9)
        throw std::logic_error("positive root is not a nonnegative integer combination");
  }
  cd.barycenter = Vector::Zero(rs.ambient_dim);
  for (int i : cd.positive_roots) cd.barycenter += rs.multiplicities[i] * rs.dual(i);
  cd.unit_barycenter = cd.barycenter / rs.norm(cd.barycenter);
  return cd;
}

double entropy(const RootSystem& rs, const ChamberData& cd) { return rs.norm(cd.barycenter); }

std::vector<SpectrumEntry> busemann_hessian_spectrum(const RootSystem& rs, const ChamberData& cd) {
  std::vector<std::pair<double, int>> raw;
  for (int i : cd.positive_roots) raw.emplace_back(rs.eval(i, cd.unit_barycenter), rs.multiplicities[i]);
  std::sort(raw.begin(), raw.end());
  std::vector<SpectrumEntry> out{{0.0, rs.rank}};
  for (auto& [v, m] : raw) {
    if (out.size() > 1 && std::abs(out.back().eigenvalue - v) <= 1e-12 * std::max(1.0, std::abs(v)))
      out.back().multiplicity += m;
    else
      out.push_back({v, m});
  }
  return out;
}

double eigenvalue_bounds(const RootSystem& rs, const ChamberData& cd) {
  double h = entropy(rs, cd);
  double lo = INFINITY, hi = 0;
  for (int i : cd.positive_roots) {
    double v = rs.eval(i, cd.unit_barycenter);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return std::max(hi / h, h / lo);
}

double ricci_entropy_bound(int n, double kappa) {
  if (kappa > 0) throw std::invalid_argument("curvature bound must be nonpositive");
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  return (n - 1) * std::sqrt(-kappa);
}

int symmetric_space_dim(const RootSystem& rs) {
  ChamberData cd = default_chamber(rs);
  int d = rs.rank;
  for (int i : cd.positive_roots) d += rs.multiplicities[i];
  return d;
}

}  // namespace hrdeg
