#pragma once

#include "hrdeg/spaces.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hrdeg {

// Largest principal angle between the lower dimensional space and the other one.
double subspace_angle(const Subspace& V, const Subspace& W);

struct AnglePropertyReport {
  int dim = 0;
  int trials = 0;
  // property name -> violation count; keys: p1 p2 p3 p4 p5 p6 p7 triangle
  std::map<std::string, int> violations;
  std::map<std::string, int> checks;
  // cases where the literal reading angle(pi_V U, U) <= angle(pi_V U, W) fails
  int literal_p6_counterexamples = 0;
  double max_triangle_excess = 0;
  bool pass() const;
};

AnglePropertyReport check_angle_properties(int dim, int trials, std::uint64_t seed);

struct MatchedSubspace {
  Subspace vprime;          // tangent coordinates at p
  int dim_v = 0;
  int dim_k = 0;            // dim of k (bracket computation)
  int dim_kv = 0;           // dim of the centralizer k_V
  int predicted_dim = 0;    // sum of m_alpha over positive roots not vanishing on V
  bool dimension_ok = false;   // dim V' >= 2 dim V
  Matrix kv_coeffs;         // columns: k_V basis in k_basis() coefficients
};

// V is a subspace of a in ambient root coordinates
MatchedSubspace matched_subspace(const SymmetricSpace& m, const Subspace& V);

struct MatchingViolation {
  int trial = 0;
  int index = 0;            // frame index i (0 based)
  int which = 0;            // 0: v', 1: v''
  double numerator = 0, denominator = 0;
};

struct MatchingWorst {
  int trial = -1;
  std::uint64_t trial_seed = 0;
  int index = 0, which = 0;
  double ratio = 0, numerator = 0, denominator = 0;
  Isometry h;
  Matrix frame;             // columns v_1..v_k
  Matrix matched_frame;     // columns v'_1, v''_1, ...
};

struct MatchingResult {
  double c_hat = 0;
  int trials = 0;
  int evaluated = 0;
  bool frame_deficient = false;        // V' decomposition could not supply 2k vectors
  bool frame_perpendicular = true;     // matched frame is orthogonal to span{v_i}
  std::vector<int> chain_dims;         // dims of V'_1..V'_k
  MatchingWorst worst;
  std::vector<MatchingViolation> violations;
};

MatchingResult empirical_matching_constant(const SymmetricSpace& m, int k, int trials, std::uint64_t seed);

}  // namespace hrdeg
