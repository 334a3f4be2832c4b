#include "hrdeg/random.hpp"

#include <cmath>
#include <numbers>

namespace hrdeg {

namespace {
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(mix64(seed) ^ (stream * 0xd1b54a32d192ed03ULL))) {}

CounterRng::result_type CounterRng::operator()() {
  std::uint64_t c = counter_++;
  return mix64(key_ ^ mix64(c + 0x632be59bd9b4e019ULL));
}

CounterRng CounterRng::split(std::uint64_t stream) const {
  CounterRng r;
  r.key_ = mix64(key_ + 0x2545f4914f6cdd1dULL * (stream + 1));
  return r;
}

double CounterRng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double CounterRng::uniform(double a, double b) { return a + (b - a) * uniform(); }

double CounterRng::normal() {
  double u1 = 0.0;
  while (u1 == 0.0) u1 = uniform();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2 * std::numbers::pi * u2);
}

Vector CounterRng::normal_vector(int n) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = normal();
  return v;
}

Matrix CounterRng::normal_matrix(int r, int c) {
  Matrix m(r, c);
  for (int j = 0; j < c; ++j)
    for (int i = 0; i < r; ++i) m(i, j) = normal();
  return m;
}

Matrix haar_orthogonal(CounterRng& rng, int n, bool special) {
  Matrix G = rng.normal_matrix(n, n);
  Eigen::HouseholderQR<Matrix> qr(G);
  Matrix Q = qr.householderQ();
  Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (R(i, i) < 0) Q.col(i) = -Q.col(i);
  if (special && Q.determinant() < 0) Q.col(0) = -Q.col(0);
  return Q;
}

Vector random_unit(CounterRng& rng, int n) {
  Vector v;
  do {
    v = rng.normal_vector(n);
  } while (v.norm() < 1e-12);
  return v / v.norm();
}

}  // namespace hrdeg
