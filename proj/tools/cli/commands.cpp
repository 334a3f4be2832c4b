#include "commands.hpp"

#include "hrdeg/anglegeom.hpp"
#include "hrdeg/barymap.hpp"
#include "hrdeg/jacobian.hpp"
#include "hrdeg/rootcomb.hpp"
#include "hrdeg/serialization.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hrdeg::cli {

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool want_csv(const RunConfig& c) {
  if (c.format == "csv") return true;
  if (c.format == "json") return false;
  throw std::invalid_argument("format must be json or csv");
}

std::shared_ptr<const SymmetricSpace> require_model(const RunConfig& c) {
  if (c.model.empty()) throw std::invalid_argument("--model is required");
  return make_space(c.model);
}

std::vector<int> profile(const RunConfig& c) {
  return c.multiplicities.empty() ? std::vector<int>{1} : c.multiplicities;
}

std::string join(const std::vector<int>& v, char sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

// ---- entropy

struct EntropyData {
  std::string label;
  const RootSystem* rs;
  ChamberData cd;
  int dim;
};

Json entropy_json(const EntropyData& e) {
  const RootSystem& rs = *e.rs;
  double h = entropy(rs, e.cd);
  double trace = 0;
  for (int i : e.cd.positive_roots) trace += rs.multiplicities[i] * rs.eval(i, e.cd.unit_barycenter);
  Json spec = Json::array();
  for (auto& s : busemann_hessian_spectrum(rs, e.cd)) spec.push_back({{"eigenvalue", s.eigenvalue}, {"multiplicity", s.multiplicity}});
  return {{"command", "entropy"},
          {"status", "ok"},
          {"input", e.label},
          {"root_system", rs.family},
          {"rank", rs.rank},
          {"dim", e.dim},
          {"entropy", h},
          {"trace_sum", trace},
          {"trace_identity_rel_error", std::abs(trace - h) / h},
          {"eigenvalue_bound", eigenvalue_bounds(rs, e.cd)},
          {"barycenter", to_json(e.cd.barycenter)},
          {"hessian_spectrum", spec}};
}

// ---- verify

struct Expectation {
  std::vector<int> failing_q;
};

bool all_ones(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int m) { return m == 1; });
}

// catalogued failures; everything else is expected to pass
std::vector<int> expected_failures(const RootSystem& rs, const std::string& check) {
  const bool single_pair = rs.rank == 1 && root_pairs(rs).size() == 1;
  if (check == "dim_inequality") {
    if (rs.family == "A2") return {0};
    if (single_pair) return {0};   // rank one: outside the rank >= 2 hypothesis
  }
  // k0 enters both sides of the dimK inequality, so only the multiplicities matter
  if (check == "dimK_inequality" && all_ones(rs.multiplicities)) {
    if (rs.family == "A2") return {2};   // sl(3,R): 3 < 4
    if (single_pair) return {1};         // sl(2,R): 1 < 2
  }
  return {};
}

const std::vector<std::string>& default_suite() {
  static const std::vector<std::string> s{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "G2", "BC1"};
  return s;
}

// ---- helpers for measures and points

BarycenterOptions solver_options(const RunConfig& c) {
  BarycenterOptions o;
  o.tol = c.tol;
  o.max_iter = c.max_iter;
  o.radius = c.radius;
  if (!(o.tol > 0) || o.max_iter <= 0 || !(o.radius > 0)) throw std::invalid_argument("tol, max-iter and radius must be positive");
  return o;
}

LoadedMeasure load_or_generate(const RunConfig& c) {
  LoadedMeasure lm;
  if (!c.measure.empty()) {
    if (c.atoms > 0) throw std::invalid_argument("give either --measure or --atoms, not both");
    lm = measure_from_json(read_json_file(c.measure));
    if (!c.model.empty() && make_space(c.model)->name() != lm.model->name())
      throw std::invalid_argument("--model " + c.model + " does not match the measure's model " + lm.model->name());
  } else if (c.atoms > 0) {
    lm.model = require_model(c);
    lm.measure = monte_carlo_measure(*lm.model, c.atoms, c.seed, c.spread);
  } else {
    throw std::invalid_argument("a measure is required: --measure FILE or --atoms N");
  }
  if (!c.save_measure.empty()) write_text_file(c.save_measure, dump(measure_to_json(*lm.model, lm.measure)));
  return lm;
}

Point start_point(const RunConfig& c, const SymmetricSpace& m) {
  if (c.start.empty()) return m.basepoint();
  return point_from_json(m, read_json_file(c.start));
}

std::vector<double> default_epsilons() {
  std::vector<double> e;
  for (int k = 0; k <= 8; ++k) e.push_back(std::pow(10.0, -1.0 - k / 4.0));
  return e;
}

double matching_estimate(const SymmetricSpace& f, int trials, std::uint64_t seed) {
  double c = 1;
  for (int k = 1; k <= f.rank(); ++k) c = std::max(c, empirical_matching_constant(f, k, trials, seed).c_hat);
  return c;
}

}  // namespace

CommandResult cmd_entropy(const RunConfig& c) {
  const bool csv = want_csv(c);
  std::shared_ptr<const SymmetricSpace> m;
  RootSystem rs;
  EntropyData e;
  if (!c.model.empty() && !c.systems.empty()) throw std::invalid_argument("give either --model or --system");
  if (!c.model.empty()) {
    m = make_space(c.model);
    e = {m->name(), &m->root_system(), m->chamber(), m->dim()};
  } else if (c.systems.size() == 1) {
    rs = build_root_system(c.systems[0], profile(c));
    e = {rs.family + " [" + join(profile(c), ',') + "]", &rs, default_chamber(rs), symmetric_space_dim(rs)};
  } else {
    throw std::invalid_argument("entropy needs --model or exactly one --system");
  }
  Json j = entropy_json(e);
  CommandResult out;
  if (!csv) {
    out.text = dump(j);
    return out;
  }
  std::ostringstream os;
  os << "quantity,value,multiplicity\n";
  os << "entropy," << format_double(j["entropy"].get<double>()) << ",\n";
  os << "trace_sum," << format_double(j["trace_sum"].get<double>()) << ",\n";
  os << "eigenvalue_bound," << format_double(j["eigenvalue_bound"].get<double>()) << ",\n";
  for (auto& s : j["hessian_spectrum"])
    os << "hessian_eigenvalue," << format_double(s["eigenvalue"].get<double>()) << ',' << s["multiplicity"].get<int>() << '\n';
  out.text = os.str();
  return out;
}

CommandResult cmd_verify(const RunConfig& c) {
  const bool csv = want_csv(c);
  if (c.k0_dim < 0) throw std::invalid_argument("k0-dim must be nonnegative");
  const std::vector<std::string>& names = c.systems.empty() ? default_suite() : c.systems;
  std::vector<RootSystem> systems;
  for (auto& n : names) systems.push_back(build_root_system(n, profile(c)));

  Json list = Json::array();
  std::vector<std::string> unexpected;
  std::ostringstream table;
  table << "system,check,q,roots,lhs,rhs,pass,expected_fail\n";
  for (auto& rs : systems) {
    std::vector<InequalityReport> reps{verify_dim_inequality(rs)};
    if (is_irreducible(rs)) reps.push_back(verify_card_recursion(rs));
    reps.push_back(verify_dimK_inequality(rs, c.k0_dim));
    Json checks = Json::array();
    for (auto& r : reps) {
      std::vector<int> exp = c.strict ? std::vector<int>{} : expected_failures(rs, r.check);
      std::vector<int> got = r.failing_q();
      const bool ok = got == exp;
      if (!ok)
        unexpected.push_back(rs.family + " " + r.check + ": expected failing q [" + join(exp, ',') + "], got [" +
                             join(got, ',') + "]");
      Json cj = to_json(r);
      cj["expected_failing_q"] = exp;
      cj["as_expected"] = ok;
      checks.push_back(cj);
      for (auto& row : r.rows) {
        const bool ef = std::find(exp.begin(), exp.end(), row.q) != exp.end();
        table << rs.family << ',' << r.check << ',' << row.q << ',' << join(row.roots, ';') << ',' << row.lhs << ','
              << row.rhs << ',' << (row.pass ? "true" : "false") << ',' << (ef ? "true" : "false") << '\n';
      }
    }
    list.push_back({{"system", rs.family}, {"multiplicities", profile(c)}, {"checks", checks}});
  }
  CommandResult out;
  out.exit_code = unexpected.empty() ? 0 : 1;
  if (!unexpected.empty()) {
    out.message = "unexpected verification outcome:";
    for (auto& u : unexpected) out.message += "\n  " + u;
  }
  if (csv) {
    out.text = table.str();
  } else {
    out.text = dump({{"command", "verify"},
                     {"status", unexpected.empty() ? "ok" : "unexpected"},
                     {"k0_dim", c.k0_dim},
                     {"strict", c.strict},
                     {"unexpected", unexpected},
                     {"systems", list}});
  }
  return out;
}

CommandResult cmd_barycenter(const RunConfig& c) {
  const bool csv = want_csv(c);
  BarycenterOptions opt = solver_options(c);
  LoadedMeasure lm = load_or_generate(c);
  const SymmetricSpace& m = *lm.model;
  Point x0 = start_point(c, m);
  std::vector<TraceRow> rows;
  TraceSink sink;
  if (!c.trace.empty()) sink = [&rows](const TraceRow& r) { rows.push_back(r); };
  BarycenterResult r = barycenter(m, lm.measure, x0, opt, sink);
  if (!c.trace.empty()) {
    std::ostringstream os;
    write_trace_csv(os, rows);
    write_text_file(c.trace, os.str());
  }
  CommandResult out;
  if (csv) {
    std::ostringstream os;
    os << "status,converged,iterations,functional,gradient_norm\n"
       << to_string(r.status) << ',' << (r.converged ? "true" : "false") << ',' << r.iterations << ','
       << format_double(r.functional) << ',' << format_double(r.gradient_norm) << '\n';
    out.text = os.str();
  } else {
    Json j{{"command", "barycenter"}, {"atoms", lm.measure.size()}};
    j.update(to_json(m, r));
    out.text = dump(j);
  }
  return out;
}

CommandResult cmd_jacobian(const RunConfig& c) {
  const bool csv = want_csv(c);
  CommandResult out;

  if (c.degree_constant) {
    if (!c.experiment.empty()) throw std::invalid_argument("--degree-constant and --experiment are exclusive");
    auto m = require_model(c);
    const double s = c.s > 0 ? c.s : m->entropy();
    // exclusions first, before any estimation work
    std::vector<DegreeFactor> probe;
    for (int i = 0; i < m->factor_count(); ++i) probe.push_back(degree_factor(m->factor(i), 1.0));
    degree_constant(probe, s);

    std::vector<DegreeFactor> factors;
    Json fj = Json::array();
    for (int i = 0; i < m->factor_count(); ++i) {
      SymmetricSpace fi({m->factor_ptr(i)});
      const bool given = c.matching_constant > 0;
      double C = given ? c.matching_constant : matching_estimate(fi, c.matching_trials, c.seed);
      if (!std::isfinite(C)) throw std::runtime_error("matching estimate failed on " + fi.name());
      factors.push_back(degree_factor(m->factor(i), C));
      fj.push_back({{"factor", fi.name()},
                    {"rank", fi.rank()},
                    {"dim", fi.dim()},
                    {"entropy", fi.entropy()},
                    {"eigenvalue_bound", eigenvalue_bounds(fi.root_system(), fi.chamber())},
                    {"matching_constant", C},
                    {"matching_source", given ? "given" : "empirical"}});
    }
    const double value = degree_constant(factors, s);
    if (csv) {
      std::ostringstream os;
      os << "model,s,degree_constant\n" << m->name() << ',' << format_double(s) << ',' << format_double(value) << '\n';
      out.text = os.str();
    } else {
      out.text = dump({{"command", "jacobian"},
                       {"mode", "degree-constant"},
                       {"status", "ok"},
                       {"model", m->name()},
                       {"s", s},
                       {"non_rigorous", true},
                       {"factors", fj},
                       {"degree_constant", json_number(value)}});
    }
    return out;
  }

  if (!c.experiment.empty()) {
    std::string spec;
    if (c.experiment == "sl3-blowup")
      spec = "spd:3";
    else if (c.experiment == "sl4-bounded")
      spec = "spd:4";
    else
      throw std::invalid_argument("unknown experiment '" + c.experiment + "' (sl3-blowup, sl4-bounded)");
    auto m = make_space(spec);
    const int haar = c.haar_atoms > 0 ? c.haar_atoms : m->dim() - 2;
    if (!(c.c0 > 0)) throw std::invalid_argument("c0 must be positive");
    std::vector<double> eps = c.epsilons.empty() ? default_epsilons() : c.epsilons;
    for (double e : eps)
      if (!(e > 0) || c.c0 * e >= 1) throw std::invalid_argument("epsilons must lie in (0, 1/c0)");
    DegenerationTable t = degeneration_experiment(*m, eps, haar, c.seed, c.c0);
    if (csv) {
      std::ostringstream os;
      write_csv(os, t);
      out.text = os.str();
    } else {
      Json j{{"command", "jacobian"}, {"mode", c.experiment}, {"status", "ok"}, {"seed", c.seed}};
      j.update(to_json(t));
      out.text = dump(j);
    }
    return out;
  }

  LoadedMeasure lm = load_or_generate(c);
  const SymmetricSpace& m = *lm.model;
  Point x = start_point(c, m);
  JacobianData d = assemble(m, x, lm.measure);
  BoundReport census = small_eigen_census(d, m.rank());
  BoundValue bound = jacobian_bound_inputs(m, c.s > 0 ? c.s : m.entropy(), d);
  if (csv) {
    std::ostringstream os;
    os << "quantity,value\n";
    os << "det_q1," << format_double(d.det_q1) << "\ndet_q2," << format_double(d.det_q2) << "\ndet_hess,"
       << format_double(d.det_hess) << "\nratio," << format_double(d.ratio) << "\nsimplified_ratio,"
       << format_double(d.simplified_ratio) << "\ntrace_q1," << format_double(d.Q1.trace()) << "\ntrace_q2,"
       << format_double(d.Q2.trace()) << "\nsmall_eigen_count," << census.k << "\nbound," << format_double(bound.value)
       << '\n';
    for (int i = 0; i < d.L.size(); ++i) os << "L" << i << ',' << format_double(d.L(i)) << '\n';
    out.text = os.str();
    return out;
  }
  Json j{{"command", "jacobian"},
         {"mode", "assemble"},
         {"status", to_string(bound.status)},
         {"model", m.name()},
         {"atoms", lm.measure.size()},
         {"data", to_json(d)},
         {"census", to_json(census)},
         {"bound", json_number(bound.value)}};
  if (m.factor_count() >= 2) j["product_split"] = to_json(product_split_check(m, x, lm.measure));
  out.text = dump(j);
  return out;
}

CommandResult cmd_angles(const RunConfig& c) {
  const bool csv = want_csv(c);
  if (c.trials <= 0) throw std::invalid_argument("trials must be positive");
  CommandResult out;
  Json j{{"command", "angles"}, {"seed", c.seed}};
  std::ostringstream os;
  bool ok = true;

  if (c.model.empty()) {
    std::vector<int> dims = c.dims;
    if (dims.empty())
      for (int d = 1; d <= 8; ++d) dims.push_back(d);
    Json reps = Json::array();
    os << "dim,property,checks,violations\n";
    for (int d : dims) {
      if (d < 1) throw std::invalid_argument("dimensions must be positive");
      AnglePropertyReport r = check_angle_properties(d, c.trials, c.seed);
      ok = ok && r.pass();
      reps.push_back(to_json(r));
      for (auto& [k, v] : r.violations) os << d << ',' << k << ',' << r.checks.at(k) << ',' << v << '\n';
    }
    j["status"] = ok ? "ok" : "violations";
    j["properties"] = reps;
  } else {
    auto m = make_space(c.model);
    const RootSystem& rs = m->root_system();
    Json subs = Json::array();
    os << "q,roots,dim_vprime,predicted_dim,dimension_ok\n";
    for (int q = 0; q <= rs.rank; ++q) {
      for (auto& S : root_kernel_subspaces(rs, q)) {
        MatchedSubspace ms = matched_subspace(*m, S.span);
        // the bracket computation must agree with the root data
        ok = ok && ms.vprime.dim() == ms.predicted_dim;
        Json sj = to_json(ms);
        sj["defining_roots"] = S.defining_roots;
        subs.push_back(sj);
        os << q << ',' << join(S.defining_roots, ';') << ',' << ms.vprime.dim() << ',' << ms.predicted_dim << ','
           << (ms.dimension_ok ? "true" : "false") << '\n';
      }
    }
    j["model"] = m->name();
    j["matched_subspaces"] = subs;
    if (c.matching_k > 0) {
      if (c.matching_k > m->rank()) throw std::invalid_argument("matching-k exceeds the rank");
      j["matching"] = to_json(empirical_matching_constant(*m, c.matching_k, c.matching_trials, c.seed));
    }
    j["status"] = ok ? "ok" : "mismatch";
  }
  out.exit_code = ok ? 0 : 1;
  if (!ok) out.message = "angle checks reported violations";
  out.text = csv ? os.str() : dump(j);
  return out;
}

}  // namespace hrdeg::cli
