#include "nilext/catalog.hpp"
#include "nilext/operators.hpp"
#include "nilext/structure.hpp"
#include "support.hpp"

#include <benchmark/benchmark.h>

using namespace nilext;

namespace {

void BM_Charpoly(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Mat m = testing::random_rational_mat(rng, state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(charpoly(m));
}
BENCHMARK(BM_Charpoly)->Arg(5)->Arg(10)->Arg(20);

void BM_JordanChevalley(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const Mat m = testing::random_jordan_conjugate(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jordan_chevalley(m));
}
BENCHMARK(BM_JordanChevalley)->Arg(5)->Arg(8);

void BM_Derivations(benchmark::State& state) {
  const LieAlgebra l = get("filiform", state.range(0)).algebra;
  for (auto _ : state) benchmark::DoNotOptimize(derivations(l).dim());
}
BENCHMARK(BM_Derivations)->Arg(5)->Arg(7)->Arg(9);

void BM_Nilradical(benchmark::State& state) {
  const LieAlgebra l = standard_solvable_extension(get("heisenberg", state.range(0)).algebra).total;
  for (auto _ : state) benchmark::DoNotOptimize(nilradical(l).dim());
}
BENCHMARK(BM_Nilradical)->Arg(3)->Arg(5);

void BM_SnoblDemo(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_snobl_counterexample().der1);
}
BENCHMARK(BM_SnoblDemo)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
