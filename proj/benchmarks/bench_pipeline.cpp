#include <benchmark/benchmark.h>

#include "cfk/complex_io.hpp"
#include "cfk/floer.hpp"
#include "cfk/homology.hpp"
#include "cfk/involution.hpp"
#include "cfk/involutive.hpp"
#include "cfk/pipeline.hpp"
#include "cfk/reduction.hpp"

using namespace cfk;

namespace {

const Parameterization kTuples[] = {{6, 4, -3, 1}, {7, 3, -3, 4}, {11, 5, -5, 7}, {14, 7, -7, 1}};

void BM_ComplexFromDiagram(benchmark::State& state) {
  const auto p = kTuples[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(complexFromParameterization(p));
  state.SetLabel(to_string(p));
}
BENCHMARK(BM_ComplexFromDiagram)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_SnfHomologyA0(benchmark::State& state) {
  const auto f = build_a0_minus(reduce(complexFromParameterization(kTuples[state.range(0)])).first);
  for (auto _ : state) benchmark::DoNotOptimize(snf_homology(f));
  state.SetLabel(to_string(kTuples[state.range(0)]));
}
BENCHMARK(BM_SnfHomologyA0)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_SolveIota(benchmark::State& state) {
  const auto c = reduce(complexFromParameterization(kTuples[state.range(0)])).first;
  for (auto _ : state) benchmark::DoNotOptimize(solve_iota(c));
  state.SetLabel(to_string(kTuples[state.range(0)]));
}
BENCHMARK(BM_SolveIota)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_SolveIota12n404(benchmark::State& state) {
  const auto c = reduce(complexFromParameterization(kTuples[3])).first;
  for (auto _ : state) benchmark::DoNotOptimize(solve_iota(c));
}
BENCHMARK(BM_SolveIota12n404)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_InvolutiveValues(benchmark::State& state) {
  const auto c = reduce(complexFromParameterization(kTuples[state.range(0)])).first;
  const auto iota = solve_iota(c).validated.front();
  for (auto _ : state) benchmark::DoNotOptimize(involutiveV0s(c, iota));
  state.SetLabel(to_string(kTuples[state.range(0)]));
}
BENCHMARK(BM_InvolutiveValues)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_Simplify(benchmark::State& state) {
  const auto c = reduce(complexFromParameterization(kTuples[state.range(0)])).first;
  for (auto _ : state) benchmark::DoNotOptimize(simplify(c));
  state.SetLabel(to_string(kTuples[state.range(0)]));
}
BENCHMARK(BM_Simplify)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
