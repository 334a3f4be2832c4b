#include "hrdeg/rootcomb.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace hrdeg {

namespace {

using IVec = std::vector<long long>;

struct FlatWork {
  RootFlat flat;
  std::vector<IVec> gens;
};

std::vector<int> pair_roots(const std::vector<int>& pairs, std::uint64_t mask) {
  std::vector<int> out;
  for (size_t i = 0; i < pairs.size(); ++i)
    if (mask >> i & 1) out.push_back(pairs[i]);
  return out;
}

Subspace cartan_subspace(const RootSystem& rs) {
  return Subspace::span(rs.cartan_basis(), rs.ambient_dim);
}

}  // namespace

std::vector<int> root_pairs(const RootSystem& rs) {
  return default_chamber(rs).positive_roots;
}

std::vector<std::vector<RootFlat>> root_flats(const RootSystem& rs) {
  const std::vector<int> pairs = root_pairs(rs);
  if (pairs.size() > 64) throw std::invalid_argument("too many root pairs for flat enumeration");
  std::vector<std::vector<FlatWork>> levels(rs.rank + 1);
  levels[0].push_back({RootFlat{}, {}});
  for (int r = 0; r < rs.rank; ++r) {
    std::map<std::uint64_t, size_t> seen;
    for (const FlatWork& f : levels[r]) {
      for (size_t p = 0; p < pairs.size(); ++p) {
        if (f.flat.pairs >> p & 1) continue;
        std::vector<IVec> gens = f.gens;
        gens.push_back(rs.roots[pairs[p]]);
        std::uint64_t mask = 0;
        for (size_t q = 0; q < pairs.size(); ++q) {
          auto test = gens;
          test.push_back(rs.roots[pairs[q]]);
          if (integer_rank(test) == r + 1) mask |= std::uint64_t{1} << q;
        }
        if (seen.count(mask)) continue;
        seen[mask] = levels[r + 1].size();
        levels[r + 1].push_back({RootFlat{mask, r + 1, std::popcount(mask)}, gens});
      }
    }
  }
  std::vector<std::vector<RootFlat>> out(rs.rank + 1);
  for (int r = 0; r <= rs.rank; ++r)
    for (auto& f : levels[r]) out[r].push_back(f.flat);
  return out;
}

int card_R(const RootSystem& rs, const Subspace& V) {
  if (V.ambient() != rs.ambient_dim) throw std::invalid_argument("subspace has wrong ambient dimension");
  if (!cartan_subspace(rs).contains(V, 1e-9)) throw std::invalid_argument("subspace is not contained in a");
  int count = 0;
  for (int i = 0; i < rs.size(); ++i) {
    Vector H = rs.dual(i);
    double rel = V.distance_to(H) / H.norm();
    if (rel <= 1e-10)
      ++count;
    else if (rel < 1e-6)
      throw std::domain_error("numerically ambiguous root membership");
  }
  return count / 2;
}

RootedSubspace flat_subspace(const RootSystem& rs, const RootFlat& f) {
  const std::vector<int> pairs = root_pairs(rs);
  std::vector<int> rts = pair_roots(pairs, f.pairs);
  Matrix cols(rs.ambient_dim, rts.size());
  for (size_t k = 0; k < rts.size(); ++k) cols.col(k) = rs.dual(rts[k]);
  RootedSubspace out{Subspace::span(cols, rs.ambient_dim), {}};
  for (int i : rts) {
    out.contained_roots.push_back(i);
    out.contained_roots.push_back(rs.negative_of(i));
  }
  std::sort(out.contained_roots.begin(), out.contained_roots.end());
  return out;
}

SingularSubspace singular_complement(const RootSystem& rs, const RootFlat& f) {
  const std::vector<int> pairs = root_pairs(rs);
  std::vector<int> rts = pair_roots(pairs, f.pairs);
  Matrix C = rs.cartan_basis();
  Matrix A(rts.size(), rs.ambient_dim);
  for (size_t k = 0; k < rts.size(); ++k) A.row(k) = rs.root(rts[k]).transpose();
  Matrix Z = null_space(A * C);
  SingularSubspace out{Subspace::span(C * Z, rs.ambient_dim), {}};
  for (int i : rts) {
    out.defining_roots.push_back(i);
    out.defining_roots.push_back(rs.negative_of(i));
  }
  std::sort(out.defining_roots.begin(), out.defining_roots.end());
  return out;
}

MaximallyRooted maximally_rooted(const RootSystem& rs, int dim) {
  if (dim < 0 || dim > rs.rank) throw std::invalid_argument("dimension out of range");
  auto flats = root_flats(rs);
  MaximallyRooted out;
  for (auto& f : flats[dim]) out.card = std::max(out.card, f.card);
  for (auto& f : flats[dim])
    if (f.card == out.card) out.subspaces.push_back(flat_subspace(rs, f));
  return out;
}

std::vector<SingularSubspace> root_kernel_subspaces(const RootSystem& rs, int dim) {
  if (dim < 0 || dim > rs.rank) throw std::invalid_argument("dimension out of range");
  std::vector<SingularSubspace> out;
  auto flats = root_flats(rs);
  for (auto& f : flats[rs.rank - dim]) out.push_back(singular_complement(rs, f));
  return out;
}

std::vector<SingularSubspace> maximally_singular(const RootSystem& rs, int dim) {
  if (dim < 0 || dim > rs.rank) throw std::invalid_argument("dimension out of range");
  auto flats = root_flats(rs)[rs.rank - dim];
  int best = 0;
  for (auto& f : flats) best = std::max(best, f.card);
  std::vector<SingularSubspace> out;
  for (auto& f : flats)
    if (f.card == best) out.push_back(singular_complement(rs, f));
  return out;
}

bool is_irreducible(const RootSystem& rs) {
  const std::vector<int> pairs = root_pairs(rs);
  const int n = static_cast<int>(pairs.size());
  Matrix Ginv = rs.gram.inverse();
  std::vector<int> comp(n, -1);
  std::vector<int> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b = 0; b < n; ++b) {
      if (comp[b] >= 0) continue;
      double ip = rs.root(pairs[a]).dot(Ginv * rs.root(pairs[b]));
      if (std::abs(ip) > 1e-12) {
        comp[b] = 0;
        stack.push_back(b);
      }
    }
  }
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool InequalityReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const InequalityRow& r) { return r.pass; });
}

std::vector<int> InequalityReport::failing_q() const {
  std::vector<int> q;
  for (auto& r : rows)
    if (!r.pass) q.push_back(r.q);
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  return q;
}

std::vector<int> card_sequence(const RootSystem& rs) {
  auto flats = root_flats(rs);
  std::vector<int> seq;
  for (auto& lvl : flats) {
    int best = 0;
    for (auto& f : lvl) best = std::max(best, f.card);
    seq.push_back(best);
  }
  return seq;
}

InequalityReport verify_dim_inequality(const RootSystem& rs) {
  const std::vector<int> pairs = root_pairs(rs);
  auto flats = root_flats(rs);
  const int total = static_cast<int>(pairs.size());
  InequalityReport rep{rs.family, "dim_inequality", {}};
  for (int q = 0; q <= rs.rank; ++q) {
    int best = 0;
    for (auto& f : flats[q]) best = std::max(best, f.card);
    for (auto& f : flats[q]) {
      if (f.card != best) continue;
      InequalityRow row;
      row.q = q;
      row.roots = pair_roots(pairs, f.pairs);
      row.lhs = total - f.card;
      row.rhs = 2LL * (rs.rank - q);
      row.pass = row.lhs >= row.rhs;
      rep.rows.push_back(row);
    }
  }
  return rep;
}

InequalityReport verify_card_recursion(const RootSystem& rs) {
  if (!is_irreducible(rs)) throw std::invalid_argument("card recursion needs an irreducible root system");
  std::vector<int> seq = card_sequence(rs);
  InequalityReport rep{rs.family, "card_recursion", {}};
  for (int i = 1; i <= rs.rank; ++i) {
    InequalityRow row;
    row.q = i;
    row.lhs = seq[i];
    row.rhs = i + seq[i - 1];
    row.pass = row.lhs >= row.rhs;
    rep.rows.push_back(row);
  }
  return rep;
}

InequalityReport verify_dimK_inequality(const RootSystem& rs, int k0_dim) {
  if (k0_dim < 0) throw std::invalid_argument("k0 dimension must be nonnegative");
  const std::vector<int> pairs = root_pairs(rs);
  long long dimK = k0_dim;
  for (int i : pairs) dimK += rs.multiplicities[i];
  InequalityReport rep{rs.family, "dimK_inequality", {}};
  auto flats = root_flats(rs);
  for (int r = 0; r <= rs.rank; ++r) {
    for (auto& f : flats[r]) {
      InequalityRow row;
      row.q = rs.rank - r;  // dim V for V = kernel intersection
      row.roots = pair_roots(pairs, f.pairs);
      long long dimKV = k0_dim;
      for (int i : row.roots) dimKV += rs.multiplicities[i];
      row.lhs = dimK;
      row.rhs = 2LL * row.q + dimKV;
      row.pass = row.lhs >= row.rhs;
      rep.rows.push_back(row);
    }
  }
  return rep;
}

}  // namespace hrdeg
