#include "hrdeg/anglegeom.hpp"

#include "hrdeg/rootcomb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hrdeg {

namespace {

constexpr double kSlack = 1e-9;

Subspace random_subspace(CounterRng& rng, int n, int d) {
  if (d == 0) return Subspace::zero(n);
  return Subspace::span(rng.normal_matrix(n, d), n);
}

Subspace random_subspace_of(CounterRng& rng, const Subspace& V, int d) {
  if (d == 0) return Subspace::zero(V.ambient());
  return Subspace::span(V.basis() * rng.normal_matrix(V.dim(), d), V.ambient());
}

Subspace line(const Vector& v) { return Subspace::span(v, static_cast<int>(v.size())); }

Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace

double subspace_angle(const Subspace& V, const Subspace& W) {
  if (V.ambient() != W.ambient()) throw std::invalid_argument("subspaces live in different spaces");
  if (V.dim() == 0 || W.dim() == 0) throw std::invalid_argument("angle with the zero subspace is undefined");
  return largest_principal_angle(V.basis(), W.basis());
}

bool AnglePropertyReport::pass() const {
  for (auto& [k, v] : violations)
    if (v) return false;
  return true;
}

AnglePropertyReport check_angle_properties(int n, int trials, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("ambient dimension must be positive");
  AnglePropertyReport rep;
  rep.dim = n;
  rep.trials = trials;
  for (const char* k : {"triangle", "p1", "p2", "p3", "p4", "p5", "p6", "p7"}) {
    rep.violations[k] = 0;
    rep.checks[k] = 0;
  }
  auto check = [&](const char* key, bool ok) {
    ++rep.checks[key];
    if (!ok) ++rep.violations[key];
  };
  CounterRng base(seed, 0x416e676c);
  for (int t = 0; t < trials; ++t) {
    CounterRng rng = base.split(t);
    int k = 1 + static_cast<int>(rng() % n);
    int dv = k + static_cast<int>(rng() % (n - k + 1));
    Subspace U = random_subspace(rng, n, k), W = random_subspace(rng, n, k), V = random_subspace(rng, n, dv);

    double uv = subspace_angle(U, V), uw = subspace_angle(U, W), vw = subspace_angle(V, W);
    double excess = vw - uv - uw;
    rep.max_triangle_excess = std::max(rep.max_triangle_excess, excess);
    check("triangle", excess <= kSlack);

    for (double a : {uv, uw, vw}) check("p1", a >= 0 && a <= M_PI / 2 + 1e-15);

    check("p3", std::abs(subspace_angle(W, V) - vw) <= 1e-12);

    if (V.dim() < n && W.dim() < n) {
      Subspace Vp = orthonormal_complement(V, n), Wp = orthonormal_complement(W, n);
      check("p2", std::abs(subspace_angle(Wp, Vp) - vw) <= kSlack);
    }

    // S inside V
    int ds = 1 + static_cast<int>(rng() % dv);
    Subspace S = random_subspace_of(rng, V, ds);
    double sw = subspace_angle(S, W);
    if (dv <= W.dim()) check("p4", sw <= vw + kSlack);
    if (ds >= W.dim()) check("p4", sw >= vw - kSlack);

    // nested pairs have zero angle, and zero angle forces containment
    for (auto [A, B] : {std::pair<const Subspace*, const Subspace*>{&S, &V}, {&V, &W}, {&U, &W}}) {
      double a = subspace_angle(*A, *B);
      if (a <= 1e-10) {
        const Subspace& small = A->dim() <= B->dim() ? *A : *B;
        const Subspace& big = A->dim() <= B->dim() ? *B : *A;
        check("p5", big.contains(small, 1e-8));
      }
    }

    // U' inside W, project to V
    Subspace Up = random_subspace_of(rng, W, 1 + static_cast<int>(rng() % k));
    Subspace P = Subspace::span(V.projector() * Up.basis(), n);
    if (P.dim() > 0) {
      double pw = subspace_angle(P, W), pu = subspace_angle(P, Up);
      check("p6", pw <= pu + kSlack);
      check("p6", pw <= vw + kSlack);
      if (pu > pw + kSlack) ++rep.literal_p6_counterexamples;
    }

    Vector v = rng.normal_vector(n);
    Vector pv = W.project(v);
    double a = subspace_angle(line(v), W);
    if (pv.norm() > 1e-12 * v.norm()) {
      double c = v.dot(pv) / (v.norm() * pv.norm());
      check("p7", std::abs(std::cos(a) - c) <= kSlack);
    }
  }
  return rep;
}

MatchedSubspace matched_subspace(const SymmetricSpace& m, const Subspace& V) {
  const RootSystem& rs = m.root_system();
  if (V.ambient() != rs.ambient_dim) throw std::invalid_argument("subspace has wrong ambient dimension");
  Subspace A = Subspace::span(rs.cartan_basis(), rs.ambient_dim);
  if (!A.contains(V, 1e-9)) throw std::invalid_argument("subspace is not contained in a");
  const int n = m.dim();
  auto K = m.k_basis();
  const int nk = static_cast<int>(K.size());

  std::vector<Matrix> X;
  for (int j = 0; j < V.dim(); ++j) X.push_back(m.p_matrix(m.embed_cartan(V.basis().col(j))));
  Matrix B(n * static_cast<int>(X.size()), nk);
  for (size_t i = 0; i < X.size(); ++i)
    for (int j = 0; j < nk; ++j) B.block(i * n, j, n, 1) = m.p_coords(bracket(K[j], X[i]));
  MatchedSubspace out;
  out.kv_coeffs = X.empty() ? Matrix(Matrix::Identity(nk, nk)) : null_space(B);
  out.dim_v = V.dim();
  out.dim_k = nk;
  out.dim_kv = static_cast<int>(out.kv_coeffs.cols());

  std::vector<Matrix> Z;
  for (int c = 0; c < out.dim_kv; ++c) {
    Matrix z = Matrix::Zero(m.lie_size(), m.lie_size());
    for (int j = 0; j < nk; ++j) z += out.kv_coeffs(j, c) * K[j];
    Z.push_back(z);
  }
  Subspace closure = Subspace::span(m.embed_cartan_subspace(rs.cartan_basis()), n);
  for (;;) {
    Matrix cols(n, closure.dim() * (1 + static_cast<int>(Z.size())));
    int c = 0;
    for (int s = 0; s < closure.dim(); ++s) {
      cols.col(c++) = closure.basis().col(s);
      Matrix S = m.p_matrix(closure.basis().col(s));
      for (auto& z : Z) cols.col(c++) = m.p_coords(bracket(z, S));
    }
    Subspace next = Subspace::span(cols, n);
    if (next.dim() == closure.dim()) break;
    closure = next;
  }
  out.vprime = orthonormal_complement(closure, n);

  const ChamberData& cd = m.chamber();
  for (int i : cd.positive_roots) {
    bool vanishes = true;
    for (int j = 0; j < V.dim(); ++j)
      if (std::abs(rs.eval(i, V.basis().col(j))) > 1e-9) vanishes = false;
    if (!vanishes) out.predicted_dim += rs.multiplicities[i];
  }
  out.dimension_ok = out.vprime.dim() >= 2 * out.dim_v;
  return out;
}

MatchingResult empirical_matching_constant(const SymmetricSpace& m, int k, int trials, std::uint64_t seed) {
  const RootSystem& rs = m.root_system();
  const int r = rs.rank, n = m.dim();
  if (k < 1 || k > r) throw std::invalid_argument("chain length must be between 1 and the rank");

  // chain U_1 < ... < U_k of kernel intersections, each step killing as many roots as possible
  auto flats = root_flats(rs);
  std::vector<RootFlat> chain(k + 1);
  {
    const auto& top = flats[r - k];
    chain[k] = *std::max_element(top.begin(), top.end(), [](auto& a, auto& b) { return a.card < b.card; });
    for (int i = k - 1; i >= 1; --i) {
      const RootFlat* best = nullptr;
      for (auto& f : flats[r - i])
        if ((f.pairs & chain[i + 1].pairs) == chain[i + 1].pairs && (!best || f.card > best->card)) best = &f;
      chain[i] = *best;
    }
  }

  MatchingResult res;
  res.trials = trials;
  Subspace F = Subspace::span(m.embed_cartan_subspace(rs.cartan_basis()), n);
  Subspace Fperp = orthonormal_complement(F, n);

  Matrix u(n, k);           // chain frame in tangent coordinates at p
  Matrix w(n, 2 * k);       // matched frame
  std::vector<Subspace> U;
  Subspace prev = Subspace::zero(n);
  for (int i = 1; i <= k; ++i) {
    U.push_back(singular_complement(rs, chain[i]).span);
    Subspace T = Subspace::span(m.embed_cartan_subspace(U.back().basis()), n);
    Matrix R = T.basis() - prev.basis() * (prev.basis().transpose() * T.basis());
    Eigen::JacobiSVD<Matrix> svd(R, Eigen::ComputeThinU);
    u.col(i - 1) = svd.matrixU().col(0);
    prev = T;
  }
  Subspace spanu = Subspace::span(u, n);
  Subspace picked = Subspace::zero(n);
  for (int i = 0; i < k; ++i) {
    MatchedSubspace ms = matched_subspace(m, U[i]);
    res.chain_dims.push_back(ms.vprime.dim());
    Subspace avail = Subspace::span(ms.vprime.basis() - picked.basis() * (picked.basis().transpose() * ms.vprime.basis()), n);
    int got = std::min(2, avail.dim());
    Matrix add = avail.basis().leftCols(got);
    if (got < 2) {
      res.frame_deficient = true;
      Subspace used = sum(picked, Subspace::span(add, n));
      Subspace extra = orthonormal_complement(sum(used, spanu), n);
      if (extra.dim() < 2 - got) {
        // no room orthogonal to the chain: fall back to anything off the picks
        extra = orthonormal_complement(used, n);
        res.frame_perpendicular = false;
      }
      Matrix a2(n, 2);
      a2 << add, extra.basis().leftCols(2 - got);
      add = a2;
    }
    w.middleCols(2 * i, 2) = add;
    Matrix cols(n, picked.dim() + 2);
    cols << picked.basis(), add;
    picked = Subspace::span(cols, n);
  }
  if (res.frame_perpendicular && (u.transpose() * w).cwiseAbs().maxCoeff() > 1e-9) res.frame_perpendicular = false;

  int dk = static_cast<int>(m.k_basis().size());
  CounterRng base(seed, 0x4d617463);
  res.worst.ratio = 0;
  for (int t = 0; t < trials; ++t) {
    CounterRng rng = base.split(t);
    Isometry k0 = m.random_rotation(rng);
    Matrix R0 = m.rotation_matrix(k0);
    Matrix v = R0.transpose() * u, vp = R0.transpose() * w;
    Isometry h;
    switch (t % 3) {
      case 0: h = m.random_rotation(rng); break;
      case 1: {
        double s = std::pow(10.0, rng.uniform(-6.0, 0.0));
        h = m.compose(m.exp_k(s * random_unit(rng, dk)), k0);
        break;
      }
      default: h = k0;
    }
    Matrix Rh = m.rotation_matrix(h);
    for (int i = 0; i < k; ++i) {
      double den = subspace_angle(line(Rh * v.col(i)), F);
      for (int which = 0; which < 2; ++which) {
        double num = subspace_angle(line(Rh * vp.col(2 * i + which)), Fperp);
        if (den < 1e-12) {
          if (num > 1e-6) res.violations.push_back({t, i, which, num, den});
          continue;
        }
        ++res.evaluated;
        double ratio = num / den;
        if (ratio > res.worst.ratio || res.worst.trial < 0) {
          res.worst = {t, seed, i, which, ratio, num, den, h, v, vp};
        }
      }
    }
  }
  res.c_hat = res.violations.empty() ? res.worst.ratio : std::numeric_limits<double>::infinity();
  return res;
}

}  // namespace hrdeg
