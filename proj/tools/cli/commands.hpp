#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hrdeg::cli {

struct RunConfig {
  // model: "spd:3", "hyp:4", products "hyp:2,hyp:2"; systems: root system families
  std::string model;
  std::vector<std::string> systems;
  std::vector<int> multiplicities;
  int k0_dim = 0;
  bool strict = false;    // verify: expect every check to pass, ignoring the catalogue

  std::uint64_t seed = 1;
  double tol = 1e-10;
  int max_iter = 100000;
  double radius = 50;

  std::string output;
  std::string format = "json";

  // barycenter / jacobian inputs
  std::string measure;
  std::string start;
  std::string trace;
  std::string save_measure;
  int atoms = 0;          // > 0: generate a Monte Carlo measure instead of reading one
  double spread = 1;

  std::string experiment;             // sl3-blowup | sl4-bounded
  bool degree_constant = false;
  double s = 0;                       // 0: the model's entropy
  double matching_constant = 0;       // 0: estimate empirically
  int matching_trials = 500;
  std::vector<double> epsilons;
  int haar_atoms = 0;                 // 0: dim p - 2
  double c0 = 1;

  // angles
  std::vector<int> dims;
  int trials = 10000;
  int matching_k = 0;
};

struct CommandResult {
  int exit_code = 0;
  std::string text;       // the report, already formatted
  std::string message;    // for stderr, may be empty
};

// invalid input throws std::invalid_argument (exit code 2)
CommandResult cmd_entropy(const RunConfig& c);
CommandResult cmd_verify(const RunConfig& c);
CommandResult cmd_barycenter(const RunConfig& c);
CommandResult cmd_jacobian(const RunConfig& c);
CommandResult cmd_angles(const RunConfig& c);

}  // namespace hrdeg::cli
