#include "hrdeg/serialization.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hrdeg {

Json json_number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

Json to_json(const Matrix& M) {
  Json rows = Json::array();
  for (int i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < M.cols(); ++j) row.push_back(json_number(M(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(json_number(v(i)));
  return a;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array of rows");
  const size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw std::invalid_argument("matrix rows must be non-empty arrays");
  Matrix M(j.size(), cols);
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("matrix rows have unequal length");
    for (size_t k = 0; k < cols; ++k) {
      if (!j[i][k].is_number()) throw std::invalid_argument("matrix entries must be numbers");
      M(i, k) = j[i][k].get<double>();
    }
  }
  return M;
}

Json to_json(const Point& x) {
  Json a = Json::array();
  for (auto& f : x.factors) a.push_back(to_json(f));
  return a;
}

Json to_json(const FlagPoint& t) {
  Json a = Json::array();
  for (auto& f : t.frames) a.push_back(to_json(f));
  return a;
}

Point point_from_json(const SymmetricSpace& m, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("point must be an array of factor matrices");
  Point x;
  for (auto& f : j) x.factors.push_back(matrix_from_json(f));
  m.validate(x);
  return x;
}

FlagPoint flag_from_json(const SymmetricSpace& m, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("flag must be an array of factor frames");
  FlagPoint t;
  for (auto& f : j) t.frames.push_back(matrix_from_json(f));
  m.validate(t);
  return t;
}

Json measure_to_json(const SymmetricSpace& m, const BoundaryMeasure& mu) {
  Json atoms = Json::array();
  for (int i = 0; i < mu.size(); ++i) atoms.push_back({{"frames", to_json(mu.atoms[i])}, {"weight", mu.weights[i]}});
  return {{"model", m.name()}, {"atoms", atoms}};
}

LoadedMeasure measure_from_json(const Json& j) {
  const Json& model = require(j, "model");
  if (!model.is_string()) throw std::invalid_argument("model must be a string");
  LoadedMeasure out;
  out.model = make_space(model.get<std::string>());
  const Json& atoms = require(j, "atoms");
  if (!atoms.is_array()) throw std::invalid_argument("atoms must be an array");
  for (auto& a : atoms) {
    out.measure.atoms.push_back(flag_from_json(*out.model, require(a, "frames")));
    const Json& w = require(a, "weight");
    if (!w.is_number()) throw std::invalid_argument("weight must be a number");
    out.measure.weights.push_back(w.get<double>());
  }
  out.measure.validate();
  return out;
}

Json to_json(const RootSystem& rs) {
  return {{"family", rs.family},
          {"rank", rs.rank},
          {"ambient_dim", rs.ambient_dim},
          {"roots", rs.roots},
          {"multiplicities", rs.multiplicities},
          {"inner_product", to_json(rs.gram)},
          {"factor_of_coord", rs.factor_of_coord}};
}

RootSystem root_system_from_json(const Json& j) {
  RootSystem rs;
  try {
    rs.family = require(j, "family").get<std::string>();
    rs.rank = require(j, "rank").get<int>();
    rs.ambient_dim = require(j, "ambient_dim").get<int>();
    rs.roots = require(j, "roots").get<std::vector<std::vector<long long>>>();
    rs.multiplicities = require(j, "multiplicities").get<std::vector<int>>();
    if (j.contains("factor_of_coord"))
      rs.factor_of_coord = j.at("factor_of_coord").get<std::vector<int>>();
    else
      rs.factor_of_coord.assign(rs.ambient_dim, 0);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed root system: ") + e.what());
  }
  rs.gram = matrix_from_json(require(j, "inner_product"));
  if (rs.ambient_dim <= 0 || rs.gram.rows() != rs.ambient_dim || rs.gram.cols() != rs.ambient_dim)
    throw std::invalid_argument("inner product must be ambient_dim x ambient_dim");
  if (static_cast<int>(rs.factor_of_coord.size()) != rs.ambient_dim)
    throw std::invalid_argument("factor_of_coord must have ambient_dim entries");
  validate_root_system(rs);
  Matrix R(rs.size(), rs.ambient_dim);
  for (int i = 0; i < rs.size(); ++i) R.row(i) = rs.root(i).transpose();
  if (numerical_rank(R) != rs.rank) throw std::invalid_argument("rank does not match the span of the roots");
  return rs;
}

Json to_json(const InequalityReport& r) {
  Json rows = Json::array();
  for (auto& row : r.rows)
    rows.push_back({{"q", row.q}, {"roots", row.roots}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"pass", row.pass}});
  return {{"system", r.system}, {"check", r.check}, {"pass", r.pass()}, {"failing_q", r.failing_q()}, {"rows", rows}};
}

Json to_json(const SymmetricSpace& m, const BarycenterResult& r) {
  return {{"model", m.name()},
          {"status", to_string(r.status)},
          {"converged", r.converged},
          {"iterations", r.iterations},
          {"functional", json_number(r.functional)},
          {"gradient_norm", json_number(r.gradient_norm)},
          {"point", to_json(r.point)}};
}

Json to_json(const DegenerationTable& t) {
  Json rows = Json::array();
  for (auto& r : t.rows)
    rows.push_back({{"eps", r.eps},
                    {"det_q1", json_number(r.det_q1)},
                    {"det_q2", json_number(r.det_q2)},
                    {"det_hess", json_number(r.det_hess)},
                    {"ratio", json_number(r.ratio)},
                    {"simplified_ratio", json_number(r.simplified_ratio)}});
  return {{"model", t.model},
          {"haar_atoms", t.haar_atoms},
          {"c0", t.c0},
          {"slope_det_q1", json_number(t.slope_q1)},
          {"slope_det_q2", json_number(t.slope_q2)},
          {"slope_ratio", json_number(t.slope_ratio)},
          {"ratio_spread", json_number(t.ratio_spread)},
          {"limit_kernel", {{"q1", t.limit_kernel_q1}, {"q2", t.limit_kernel_q2}, {"hess", t.limit_kernel_hess}}},
          {"rows", rows}};
}

Json to_json(const AnglePropertyReport& r) {
  Json props = Json::object();
  for (auto& [k, v] : r.violations) props[k] = {{"checks", r.checks.at(k)}, {"violations", v}};
  return {{"dim", r.dim},
          {"trials", r.trials},
          {"pass", r.pass()},
          {"max_triangle_excess", json_number(r.max_triangle_excess)},
          {"literal_p6_counterexamples", r.literal_p6_counterexamples},
          {"properties", props}};
}

Json to_json(const MatchedSubspace& r) {
  return {{"dim_v", r.dim_v},
          {"dim_vprime", r.vprime.dim()},
          {"predicted_dim", r.predicted_dim},
          {"dim_k", r.dim_k},
          {"dim_kv", r.dim_kv},
          {"dimension_ok", r.dimension_ok}};
}

Json to_json(const MatchingResult& r) {
  Json viol = Json::array();
  for (auto& v : r.violations)
    viol.push_back({{"trial", v.trial}, {"index", v.index}, {"which", v.which}, {"numerator", json_number(v.numerator)},
                    {"denominator", json_number(v.denominator)}});
  return {{"c_hat", json_number(r.c_hat)},
          {"trials", r.trials},
          {"evaluated", r.evaluated},
          {"frame_deficient", r.frame_deficient},
          {"frame_perpendicular", r.frame_perpendicular},
          {"chain_dims", r.chain_dims},
          {"non_rigorous", true},
          {"worst",
           {{"trial", r.worst.trial},
            {"index", r.worst.index},
            {"which", r.worst.which},
            {"ratio", json_number(r.worst.ratio)},
            {"numerator", json_number(r.worst.numerator)},
            {"denominator", json_number(r.worst.denominator)}}},
          {"violation_count", r.violations.size()},
          {"violations", viol}};
}

Json to_json(const JacobianData& d) {
  return {{"det_q1", json_number(d.det_q1)},
          {"det_q2", json_number(d.det_q2)},
          {"det_hess", json_number(d.det_hess)},
          {"ratio", json_number(d.ratio)},
          {"simplified_ratio", json_number(d.simplified_ratio)},
          {"trace_q1", json_number(d.Q1.trace())},
          {"trace_q2", json_number(d.Q2.trace())},
          {"L", to_json(d.L)}};
}

Json to_json(const BoundReport& r) {
  return {{"epsilon", json_number(r.epsilon)}, {"k", r.k}, {"k_within_rank", r.k_within_rank}, {"all_positive", r.all_positive},
          {"L", to_json(r.L)}};
}

Json to_json(const ProductSplitReport& r) {
  return {{"det_q1", json_number(r.det_q1)},         {"det_q1_factors", json_number(r.det_q1_factors)},
          {"det_hess", json_number(r.det_hess)},     {"det_hess_factors", json_number(r.det_hess_factors)},
          {"schur_ok", r.schur_ok},          {"hess_ok", r.hess_ok}};
}

Json to_json(const DetsumReport& r) {
  return {{"trials", r.trials},
          {"violations", r.violations},
          {"strict_checks", r.strict_checks},
          {"strict_violations", r.strict_violations}};
}

Json to_json(const std::vector<ConcentrationRow>& rows) {
  Json a = Json::array();
  for (auto& r : rows) a.push_back({{"t", r.t}, {"fraction", r.fraction}});
  return a;
}

void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows) {
  os << "iteration,functional,gradient_norm,step\n";
  for (auto& r : rows)
    os << r.iteration << ',' << format_double(r.functional) << ',' << format_double(r.gradient_norm) << ','
       << format_double(r.step) << '\n';
}

void write_csv(std::ostream& os, const DegenerationTable& t) {
  os << "eps,det_q1,det_q2,det_hess,ratio,simplified_ratio\n";
  for (auto& r : t.rows)
    os << format_double(r.eps) << ',' << format_double(r.det_q1) << ',' << format_double(r.det_q2) << ','
       << format_double(r.det_hess) << ',' << format_double(r.ratio) << ',' << format_double(r.simplified_ratio) << '\n';
}

void write_csv(std::ostream& os, const std::vector<ConcentrationRow>& rows) {
  os << "t,fraction\n";
  for (auto& r : rows) os << format_double(r.t) << ',' << format_double(r.fraction) << '\n';
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  // write then rename so readers never see half a file
  std::filesystem::path tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << text;
    if (!out) throw std::invalid_argument("failed writing '" + path + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hrdeg
