#pragma once

#include "hrdeg/anglegeom.hpp"
#include "hrdeg/barymap.hpp"
#include "hrdeg/jacobian.hpp"
#include "hrdeg/rootcomb.hpp"

#include "json.hpp"

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace hrdeg {

using Json = nlohmann::ordered_json;

// JSON has no inf/nan: those become the strings "inf", "-inf", "nan"
Json json_number(double x);

// matrices are arrays of rows
Json to_json(const Matrix& M);
Json to_json(const Vector& v);
Matrix matrix_from_json(const Json& j);

// points: one matrix per factor; flags: one frame per factor
Json to_json(const Point& x);
Json to_json(const FlagPoint& t);
Point point_from_json(const SymmetricSpace& m, const Json& j);
FlagPoint flag_from_json(const SymmetricSpace& m, const Json& j);

// {"model": "spd:3", "atoms": [{"frames": [...], "weight": w}, ...]}
Json measure_to_json(const SymmetricSpace& m, const BoundaryMeasure& mu);
struct LoadedMeasure {
  std::shared_ptr<const SymmetricSpace> model;
  BoundaryMeasure measure;
};
LoadedMeasure measure_from_json(const Json& j);

// family, rank, ambient_dim, roots, multiplicities, inner_product
Json to_json(const RootSystem& rs);
RootSystem root_system_from_json(const Json& j);

Json to_json(const InequalityReport& r);
Json to_json(const SymmetricSpace& m, const BarycenterResult& r);
Json to_json(const DegenerationTable& t);
Json to_json(const AnglePropertyReport& r);
Json to_json(const MatchedSubspace& r);
Json to_json(const MatchingResult& r);
Json to_json(const JacobianData& d);
Json to_json(const BoundReport& r);
Json to_json(const ProductSplitReport& r);
Json to_json(const DetsumReport& r);
Json to_json(const std::vector<ConcentrationRow>& rows);

void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows);
void write_csv(std::ostream& os, const DegenerationTable& t);
void write_csv(std::ostream& os, const std::vector<ConcentrationRow>& rows);

// shortest round-trip decimal form, used by every CSV writer
std::string format_double(double x);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hrdeg
