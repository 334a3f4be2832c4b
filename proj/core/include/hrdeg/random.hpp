#pragma once

#include "hrdeg/numerics.hpp"

#include <cstdint>
#include <limits>
#include <random>

namespace hrdeg {

// Counter based generator: output i of stream (key) is mix(key, i).
// split() derives an independent child key, so experiments can hand
// one generator per trial without sharing state.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed = 0, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  CounterRng split(std::uint64_t stream) const;
  std::uint64_t key() const { return key_; }

  double uniform();                  // [0,1)
  double uniform(double a, double b);
  double normal();                   // standard gaussian (Box-Muller, no cached state)
  Vector normal_vector(int n);
  Matrix normal_matrix(int r, int c);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Haar distributed element of O(n) (det +1 when special)
Matrix haar_orthogonal(CounterRng& rng, int n, bool special = true);
// random unit vector in R^n
Vector random_unit(CounterRng& rng, int n);

}  // namespace hrdeg
