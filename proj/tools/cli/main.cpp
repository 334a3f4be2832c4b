#include "commands.hpp"
#include "config.hpp"

#include "hrdeg/serialization.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace hrdeg::cli;

namespace {

void add_common(CLI::App* s, RunConfig& c) {
  s->add_option("--seed", c.seed, "random seed");
  s->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  s->add_option("--output,-o", c.output, "write the report here instead of stdout");
}

void add_model(CLI::App* s, RunConfig& c) {
  s->add_option("--model", c.model, "spd:N, hyp:N or a comma separated product");
}

void add_solver(CLI::App* s, RunConfig& c) {
  s->add_option("--tol", c.tol, "gradient norm tolerance");
  s->add_option("--max-iter", c.max_iter, "iteration cap");
  s->add_option("--radius", c.radius, "divergence radius");
}

void add_measure(CLI::App* s, RunConfig& c) {
  s->add_option("--measure", c.measure, "measure JSON file");
  s->add_option("--atoms", c.atoms, "generate a Monte Carlo measure with this many atoms (needs --model)");
  s->add_option("--spread", c.spread, "transvection length bound for generated measures");
  s->add_option("--save-measure", c.save_measure, "write the measure used as JSON");
  s->add_option("--start", c.start, "point JSON file (default: basepoint)");
}

// "--config FILE" anywhere after the subcommand; returns the remaining args
std::vector<std::string> expand_config(CLI::App* sub, std::vector<std::string> args) {
  std::vector<std::string> rest, from_file;
  std::string path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw std::invalid_argument("--config needs a file");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (path.empty()) return rest;
  for (auto& [k, v] : read_config_file(path)) {
    if (sub->get_option_no_throw("--" + k) == nullptr)
      throw std::invalid_argument("unknown config key '" + k + "' for " + sub->get_name());
    from_file.push_back("--" + k + "=" + v);
  }
  // command line flags come last so they win
  from_file.insert(from_file.end(), rest.begin(), rest.end());
  return from_file;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  CLI::App app("Numerical companion for barycenter-map degree estimates on symmetric spaces", "hrdeg");
  app.require_subcommand(1);

  auto* ent = app.add_subcommand("entropy", "volume entropy, Busemann Hessian spectrum, eigenvalue bound");
  add_common(ent, c);
  add_model(ent, c);
  ent->add_option("--system", c.systems, "root system family, e.g. A3, B2, G2, BC1");
  ent->add_option("--multiplicities", c.multiplicities, "multiplicity profile (one per root length)")->delimiter(',');

  auto* ver = app.add_subcommand("verify", "root combinatorial inequalities");
  add_common(ver, c);
  ver->add_option("--system", c.systems, "systems to check (default: every supported system of rank <= 4)")
      ->delimiter(',');
  ver->add_option("--multiplicities", c.multiplicities, "multiplicity profile")->delimiter(',');
  ver->add_option("--k0-dim", c.k0_dim, "dimension of the compact centralizer part");
  ver->add_flag("--strict", c.strict, "expect every check to pass (ignore the catalogue of known failures)");

  auto* bar = app.add_subcommand("barycenter", "minimize the Busemann functional of a boundary measure");
  add_common(bar, c);
  add_model(bar, c);
  add_solver(bar, c);
  add_measure(bar, c);
  bar->add_option("--trace", c.trace, "write the iteration trace as CSV");

  auto* jac = app.add_subcommand("jacobian", "Q1/Q2 assembly, degeneration experiments, degree constant");
  add_common(jac, c);
  add_model(jac, c);
  add_measure(jac, c);
  jac->add_option("--experiment", c.experiment, "sl3-blowup or sl4-bounded");
  jac->add_flag("--degree-constant", c.degree_constant, "assemble the degree constant for --model");
  jac->add_option("--s", c.s, "exponent s (default: entropy of the model)");
  jac->add_option("--matching-constant", c.matching_constant, "use this matching constant instead of estimating");
  jac->add_option("--matching-trials", c.matching_trials, "trials for the empirical matching constant");
  jac->add_option("--epsilons", c.epsilons, "perturbation sizes for experiments")->delimiter(',');
  jac->add_option("--haar-atoms", c.haar_atoms, "Haar atoms in the degeneration family");
  jac->add_option("--c0", c.c0, "Haar mass scale in the degeneration family");

  auto* ang = app.add_subcommand("angles", "principal angle properties, matched subspaces, matching constants");
  add_common(ang, c);
  add_model(ang, c);
  ang->add_option("--dim", c.dims, "ambient dimensions for the property suite (default 1..8)")->delimiter(',');
  ang->add_option("--trials", c.trials, "random triples per dimension");
  ang->add_option("--matching-k", c.matching_k, "also estimate the matching constant for this chain length");
  ang->add_option("--matching-trials", c.matching_trials, "trials for the matching estimate");

  for (auto* s : {ent, ver, bar, jac, ang}) s->add_option("--config", "key = value file; keys are option names");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (!args.empty()) {
      for (auto* s : {ent, ver, bar, jac, ang}) {
        if (args[0] != s->get_name()) continue;
        std::vector<std::string> rest(args.begin() + 1, args.end());
        rest = expand_config(s, rest);
        args.assign(1, args[0]);
        args.insert(args.end(), rest.begin(), rest.end());
      }
    }
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    CommandResult r;
    if (*ent) r = cmd_entropy(c);
    else if (*ver) r = cmd_verify(c);
    else if (*bar) r = cmd_barycenter(c);
    else if (*jac) r = cmd_jacobian(c);
    else r = cmd_angles(c);
    if (c.output.empty())
      std::cout << r.text << std::flush;
    else
      hrdeg::write_text_file(c.output, r.text);
    if (!r.message.empty()) std::cerr << r.message << "\n";
    return r.exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
