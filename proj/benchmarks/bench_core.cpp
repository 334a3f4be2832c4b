#include "hrdeg/anglegeom.hpp"
#include "hrdeg/barymap.hpp"
#include "hrdeg/jacobian.hpp"
#include "hrdeg/rootcomb.hpp"

#include <benchmark/benchmark.h>

using namespace hrdeg;

namespace {

void BM_SymEigen(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  CounterRng rng(1);
  Matrix G = rng.normal_matrix(n, n);
  Matrix A = G + G.transpose();
  for (auto _ : st) benchmark::DoNotOptimize(sym_eigen(A));
}
BENCHMARK(BM_SymEigen)->Arg(3)->Arg(5)->Arg(9)->Arg(20);

void BM_Busemann(benchmark::State& st, const char* spec) {
  auto m = make_space(spec);
  CounterRng rng(2);
  Point x = m->random_point(rng, 2);
  FlagPoint t = m->random_flag(rng);
  for (auto _ : st) benchmark::DoNotOptimize(m->busemann(x, t));
}
BENCHMARK_CAPTURE(BM_Busemann, spd3, "spd:3");
BENCHMARK_CAPTURE(BM_Busemann, spd4, "spd:4");
BENCHMARK_CAPTURE(BM_Busemann, hyp3, "hyp:3");

void BM_Barycenter(benchmark::State& st, const char* spec) {
  auto m = make_space(spec);
  BoundaryMeasure mu = monte_carlo_measure(*m, static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(barycenter(*m, mu, m->basepoint()));
}
BENCHMARK_CAPTURE(BM_Barycenter, spd3, "spd:3")->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Barycenter, hyp3, "hyp:3")->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Assemble(benchmark::State& st, const char* spec) {
  auto m = make_space(spec);
  BoundaryMeasure mu = monte_carlo_measure(*m, 100, 4);
  for (auto _ : st) benchmark::DoNotOptimize(assemble(*m, m->basepoint(), mu));
}
BENCHMARK_CAPTURE(BM_Assemble, spd3, "spd:3")->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Assemble, spd4, "spd:4")->Unit(benchmark::kMicrosecond);

void BM_CardSequence(benchmark::State& st, const char* fam) {
  RootSystem rs = build_root_system(fam);
  for (auto _ : st) benchmark::DoNotOptimize(card_sequence(rs));
}
BENCHMARK_CAPTURE(BM_CardSequence, A4, "A4");
BENCHMARK_CAPTURE(BM_CardSequence, B4, "B4");

void BM_AngleProperties(benchmark::State& st) {
  const int dim = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(check_angle_properties(dim, 100, 5));
}
BENCHMARK(BM_AngleProperties)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

// the distro libbenchmark_main.a is LTO bytecode from another gcc, so no benchmark_main
BENCHMARK_MAIN();
