#include "hrdeg/serialization.hpp"

#include "config.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace hrdeg;

TEST(Json, MatrixRoundTrip) {
  Matrix M(2, 3);
  M << 1, -2.5, 3e-17, 0.1, 1e300, -0.0;
  EXPECT_EQ(matrix_from_json(to_json(M)), M);
  EXPECT_THROW(matrix_from_json(Json::parse("[[1,2],[3]]")), std::invalid_argument);
  EXPECT_THROW(matrix_from_json(Json::parse("[]")), std::invalid_argument);
  EXPECT_THROW(matrix_from_json(Json::parse("[[1,\"a\"]]")), std::invalid_argument);
}

TEST(Json, NonFiniteNumbers) {
  EXPECT_EQ(json_number(INFINITY), "inf");
  EXPECT_EQ(json_number(-INFINITY), "-inf");
  EXPECT_EQ(json_number(NAN), "nan");
  EXPECT_EQ(json_number(2.5), 2.5);
}

TEST(Json, MeasureRoundTrip) {
  for (auto spec : {"spd:3", "hyp:4", "hyp:2,spd:3"}) {
    auto m = make_space(spec);
    BoundaryMeasure mu = monte_carlo_measure(*m, 7, 3);
    Json j = measure_to_json(*m, mu);
    LoadedMeasure back = measure_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.model->name(), m->name());
    ASSERT_EQ(back.measure.size(), 7);
    for (int i = 0; i < 7; ++i) {
      EXPECT_EQ(back.measure.weights[i], mu.weights[i]);
      for (int f = 0; f < m->factor_count(); ++f) EXPECT_EQ(back.measure.atoms[i].frames[f], mu.atoms[i].frames[f]);
    }
  }
}

TEST(Json, MeasureRejectsBadInput) {
  EXPECT_THROW(measure_from_json(Json::parse(R"({"atoms": []})")), std::invalid_argument);
  EXPECT_THROW(measure_from_json(Json::parse(R"({"model": "hyp:2", "atoms": []})")), std::invalid_argument);
  EXPECT_THROW(measure_from_json(Json::parse(R"({"model": "hyp:2", "atoms": [{"frames": [[[1],[0]]], "weight": 0.5}]})")),
               std::invalid_argument);
  EXPECT_THROW(measure_from_json(Json::parse(R"({"model": "hyp:2", "atoms": [{"frames": [[[2],[0]]], "weight": 1}]})")),
               std::invalid_argument);
  EXPECT_THROW(measure_from_json(Json::parse(R"({"model": "nope:2", "atoms": []})")), std::invalid_argument);
}

TEST(Json, PointRoundTripAndValidation) {
  auto m = make_space("spd:3");
  CounterRng rng(1);
  Point x = m->random_point(rng, 1);
  Point y = point_from_json(*m, Json::parse(to_json(x).dump()));
  EXPECT_EQ(y.factors[0], x.factors[0]);
  EXPECT_THROW(point_from_json(*m, Json::parse("[[[2,0,0],[0,1,0],[0,0,1]]]")), std::invalid_argument);
}

TEST(Json, RootSystemRoundTrip) {
  for (auto f : {"A3", "G2", "BC1"}) {
    RootSystem rs = build_root_system(f);
    RootSystem back = root_system_from_json(Json::parse(to_json(rs).dump()));
    EXPECT_EQ(back.roots, rs.roots);
    EXPECT_EQ(back.multiplicities, rs.multiplicities);
    EXPECT_EQ(back.rank, rs.rank);
    EXPECT_EQ(back.gram, rs.gram);
  }
  Json j = to_json(build_root_system("A2"));
  j["rank"] = 3;
  EXPECT_THROW(root_system_from_json(j), std::invalid_argument);
  j = to_json(build_root_system("A2"));
  j["roots"].erase(0);
  EXPECT_THROW(root_system_from_json(j), std::invalid_argument);
}

TEST(Csv, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3, 1e-300, -2.5e17, 0.0}) EXPECT_EQ(std::stod(format_double(v)), v);
  EXPECT_EQ(format_double(INFINITY), "inf");
  std::ostringstream os;
  write_trace_csv(os, {{0, 1.5, 0.25, 0}, {1, 1.25, 0.125, 2}});
  EXPECT_EQ(os.str(), "iteration,functional,gradient_norm,step\n0,1.5,0.25,0\n1,1.25,0.125,2\n");
}

TEST(Config, ParsesKeyValues) {
  auto e = cli::parse_config("# comment\n seed = 4 \n\ntol=1e-8 # trailing\nmodel = spd:3\n");
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[0], (std::pair<std::string, std::string>{"seed", "4"}));
  EXPECT_EQ(e[1].second, "1e-8");
  EXPECT_EQ(e[2].second, "spd:3");
  EXPECT_THROW(cli::parse_config("seed 4\n"), std::invalid_argument);
  EXPECT_THROW(cli::parse_config("seed=1\nseed=2\n"), std::invalid_argument);
  EXPECT_THROW(cli::parse_config("--seed=1\n"), std::invalid_argument);
  EXPECT_THROW(cli::read_config_file("/nonexistent/file.cfg"), std::invalid_argument);
}
