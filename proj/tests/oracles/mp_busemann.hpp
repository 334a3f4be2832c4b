#pragma once

// Busemann functions by the limit definition B(x, theta) = lim d(x, ray(t)) - t,
// evaluated at large t in MPFR arithmetic. Nothing here calls into the library.

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracle {

using mp = boost::multiprecision::mpfr_float;
using MpMat = std::vector<std::vector<mp>>;

inline MpMat mp_zero(int n) { return MpMat(n, std::vector<mp>(n, mp(0))); }

// L with A = L L^T
inline MpMat mp_cholesky(const MpMat& A) {
  const int n = static_cast<int>(A.size());
  MpMat L = mp_zero(n);
  for (int j = 0; j < n; ++j) {
    mp s = A[j][j];
    for (int k = 0; k < j; ++k) s -= L[j][k] * L[j][k];
    L[j][j] = sqrt(s);
    for (int i = j + 1; i < n; ++i) {
      mp t = A[i][j];
      for (int k = 0; k < j; ++k) t -= L[i][k] * L[j][k];
      L[i][j] = t / L[j][j];
    }
  }
  return L;
}

// L^-1 B, L lower triangular
inline MpMat mp_lower_solve(const MpMat& L, const MpMat& B) {
  const int n = static_cast<int>(L.size());
  MpMat X = B;
  for (size_t c = 0; c < B[0].size(); ++c)
    for (int i = 0; i < n; ++i) {
      mp s = B[i][c];
      for (int k = 0; k < i; ++k) s -= L[i][k] * X[k][c];
      X[i][c] = s / L[i][i];
    }
  return X;
}

// classical Jacobi, largest off-diagonal entry first
inline std::vector<mp> mp_sym_eigenvalues(MpMat A) {
  const int n = static_cast<int>(A.size());
  mp eps = pow(mp(10), -static_cast<int>(mp::default_precision()) + 20);
  mp scale = 0;
  for (auto& row : A)
    for (auto& a : row) scale = std::max(scale, mp(abs(a)));
  for (int sweep = 0; sweep < 200 * n * n; ++sweep) {
    int p = 0, q = 1;
    mp best = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (abs(A[i][j]) > best) {
          best = abs(A[i][j]);
          p = i;
          q = j;
        }
    if (best <= eps * sqrt(abs(A[p][p] * A[q][q])) || best <= eps * scale) break;
    mp theta = (A[q][q] - A[p][p]) / (2 * A[p][q]);
    mp t = (theta >= 0 ? mp(1) : mp(-1)) / (abs(theta) + sqrt(theta * theta + 1));
    mp c = 1 / sqrt(t * t + 1), s = t * c;
    for (int k = 0; k < n; ++k) {
      mp akp = A[k][p], akq = A[k][q];
      A[k][p] = c * akp - s * akq;
      A[k][q] = s * akp + c * akq;
    }
    for (int k = 0; k < n; ++k) {
      mp apk = A[p][k], aqk = A[q][k];
      A[p][k] = c * apk - s * aqk;
      A[q][k] = s * apk + c * aqk;
    }
  }
  std::vector<mp> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = A[i][i];
  return ev;
}

// SPD(n) with d(x, y) = 1/2 |log(x^-1/2 y x^-1/2)|_F; the ray towards the
// frame k is k diag(exp(2 t b_i)) k^T with b decreasing, |b| = 1.
// x, k row major n x n.
inline mp spd_limit(const std::vector<double>& x, const std::vector<double>& k, const std::vector<double>& b, double t) {
  const int n = static_cast<int>(b.size());
  MpMat X = mp_zero(n), A = mp_zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      X[i][j] = x[i * n + j];
      A[i][j] = mp(k[i * n + j]) * exp(mp(t) * b[j]);
    }
  MpMat L = mp_cholesky(X);
  MpMat M = mp_lower_solve(L, A);
  MpMat Y = mp_zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < n; ++c) Y[i][j] += M[i][c] * M[j][c];
  mp s = 0;
  for (auto& l : mp_sym_eigenvalues(Y)) {
    mp lg = log(l);
    s += lg * lg;
  }
  return sqrt(s) / 2 - t;
}

// H^n hyperboloid model, <x,y> = -x0 y0 + sum xi yi; ray (cosh t, sinh t u)
inline mp hyperbolic_limit(const std::vector<double>& x, const std::vector<double>& u, double t) {
  mp inner = -mp(x[0]) * cosh(mp(t));
  for (size_t i = 0; i < u.size(); ++i) inner += mp(x[i + 1]) * sinh(mp(t)) * u[i];
  return acosh(-inner) - t;
}

}  // namespace oracle

namespace oracle {

// In higher rank d(x, ray(t)) - t = B + a/t + c/t^2 + ..., the 1/t terms come
// from the directions of the flat orthogonal to the ray. Richardson over t, t/2, t/4.
inline mp spd_limit_refined(const std::vector<double>& x, const std::vector<double>& k, const std::vector<double>& b,
                            double t) {
  mp f1 = spd_limit(x, k, b, t), f2 = spd_limit(x, k, b, t / 2), f4 = spd_limit(x, k, b, t / 4);
  return (8 * f1 - 6 * f2 + f4) / 3;
}

}  // namespace oracle
