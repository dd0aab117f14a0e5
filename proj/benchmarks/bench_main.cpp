#include <benchmark/benchmark.h>

#include <array>

#include "dehnhom/obstruction.hpp"
#include "dehnhom/smith.hpp"
#include "dehnhom/surgery.hpp"
#include "dehnhom/verify.hpp"

using namespace dehnhom;

static void BM_SmithSmall(benchmark::State& state) {
  const IntMatrix a{{6, -4}, {10, 14}};
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithSmall);

static void BM_SmithBig(benchmark::State& state) {
  const IntMatrix a{{1, 4611686018427387903L}, {4611686018427387903L, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithBig);

static void BM_Cokernel2x2Int(benchmark::State& state) {
  const std::array<std::int64_t, 4> a{-7, 12, -30, 11};
  for (auto _ : state) benchmark::DoNotOptimize(cokernel(2, 2, a));
}
BENCHMARK(BM_Cokernel2x2Int);

static void BM_Cokernel4x5(benchmark::State& state) {
  const IntMatrix a{{2, 4, 6, 8, 10}, {3, -1, 4, 1, 5}, {9, 2, 6, 5, 3}, {5, 8, 9, 7, 9}};
  for (auto _ : state) benchmark::DoNotOptimize(cokernel(a));
}
BENCHMARK(BM_Cokernel4x5);

static void BM_SurgeredHomology(benchmark::State& state) {
  const SurgeryParams s(29, 7, 11, -40, 29);
  for (auto _ : state) benchmark::DoNotOptimize(surgered_homology(s));
}
BENCHMARK(BM_SurgeredHomology);

static void BM_PhiSolutions(benchmark::State& state) {
  const SurgeryParams s(state.range(0), 1, 1, 0, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phi_solutions(s));
}
BENCHMARK(BM_PhiSolutions)->Arg(5)->Arg(31)->Arg(127);

static void BM_VerifyTheoremI(benchmark::State& state) {
  ParameterBox box;
  box.p_values = {2, 3, 5, 7};
  box.w_hi_times_p = 3;
  box.n = {-10, 10};
  box.nprime = {1, 10};
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_i(box));
}
BENCHMARK(BM_VerifyTheoremI)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
