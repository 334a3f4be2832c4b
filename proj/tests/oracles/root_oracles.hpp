#pragma once

// Brute-force and closed-form references for root data, written against plain
// integer vectors so they share no code with the library.

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using IVec = std::vector<long long>;

inline int rank_of(const std::vector<IVec>& rows, int dim) {
  if (rows.empty()) return 0;
  Eigen::MatrixXd M(rows.size(), dim);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < dim; ++j) M(i, j) = static_cast<double>(rows[i][j]);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
  lu.setThreshold(1e-9);
  return static_cast<int>(lu.rank());
}

// one representative per {alpha, -alpha}: first nonzero coordinate positive
inline std::vector<IVec> pair_representatives(const std::vector<IVec>& roots) {
  std::vector<IVec> out;
  for (auto& r : roots) {
    for (long long v : r) {
      if (v == 0) continue;
      if (v > 0) out.push_back(r);
      break;
    }
  }
  return out;
}

// max number of root pairs inside a root-spanned subspace of each dimension,
// by enumerating every subset of pairs
inline std::vector<int> max_cards(const std::vector<IVec>& roots, int dim) {
  std::vector<IVec> pairs = pair_representatives(roots);
  const int N = static_cast<int>(pairs.size());
  const int r = rank_of(pairs, dim);
  std::vector<int> best(r + 1, 0);
  for (std::uint64_t mask = 0; mask < (1ULL << N); ++mask) {
    std::vector<IVec> sub;
    for (int i = 0; i < N; ++i)
      if (mask >> i & 1) sub.push_back(pairs[i]);
    int q = rank_of(sub, dim);
    // closure: every pair in the span
    int card = 0;
    for (int i = 0; i < N; ++i) {
      std::vector<IVec> ext = sub;
      ext.push_back(pairs[i]);
      if (rank_of(ext, dim) == q) ++card;
    }
    if (card > best[q]) best[q] = card;
  }
  return best;
}

// |2 rho| for A_{n-1} with multiplicity m and the standard inner product
inline double entropy_A(int n, int m) { return m * std::sqrt(n * (n * n - 1.0) / 3.0); }

// b for B_r (short e_i, long e_i +- e_j), multiplicity (m_short, m_long)
inline double entropy_B(int r, int ms, int ml) {
  double s = 0;
  for (int i = 1; i <= r; ++i) {
    double c = ms + 2.0 * ml * (r - i);
    s += c * c;
  }
  return std::sqrt(s);
}

// C_r: short e_i +- e_j, long 2 e_i
inline double entropy_C(int r, int ms, int ml) {
  double s = 0;
  for (int i = 1; i <= r; ++i) {
    double c = 2.0 * ms * (r - i) + 2.0 * ml;
    s += c * c;
  }
  return std::sqrt(s);
}

// D_r: e_i +- e_j
inline double entropy_D(int r, int m) {
  double s = 0;
  for (int i = 1; i <= r; ++i) s += std::pow(2.0 * m * (r - i), 2);
  return std::sqrt(s);
}

// G_2 in the sum-zero plane of R^3: short pos sum (2,0,-2), long pos sum (2,2,-4)
inline double entropy_G2(int ms, int ml) {
  double b[3] = {2.0 * ms + 2.0 * ml, 2.0 * ml, -2.0 * ms - 4.0 * ml};
  return std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
}

// BC_1 with roots +-1, +-2
inline double entropy_BC1(int m1, int m2) { return m1 + 2.0 * m2; }

}  // namespace oracle
