/*
    Copyright (C) 2026 The glslab Authors

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <cmath>

#include "glslab/counterexample.hpp"
#include "glslab/montecarlo.hpp"
#include "glslab/norms.hpp"
#include "glslab/young.hpp"

using namespace glslab;

static void BM_LpNormSqrtLog(benchmark::State& state) {
  const auto f = UnitIntervalFunction::sqrt_log();
  const double p = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lp_norm(f, p).value);
}
BENCHMARK(BM_LpNormSqrtLog)->Arg(1)->Arg(4)->Arg(10);

static void BM_LpNormBlock(benchmark::State& state) {
  const auto spec = ProcessSpec::build(1.0, UnitIntervalFunction::sqrt_log(), 1000);
  const auto g = block(spec, 37);
  for (auto _ : state) benchmark::DoNotOptimize(lp_norm(g, 3.9).value);
}
BENCHMARK(BM_LpNormBlock);

static void BM_GlsNormSubgaussian(benchmark::State& state) {
  const auto f = UnitIntervalFunction::sqrt_log();
  const auto psi = PsiFunction::moment_power(0.5, 1.0, 60.0);
  for (auto _ : state) benchmark::DoNotOptimize(gls_norm(f, psi).value);
}
BENCHMARK(BM_GlsNormSubgaussian)->Unit(benchmark::kMillisecond);

static void BM_LuxemburgExpSquare(benchmark::State& state) {
  const auto f = UnitIntervalFunction::sqrt_log();
  const auto Phi = YoungFunction::exp_linear();
  for (auto _ : state) benchmark::DoNotOptimize(luxemburg_norm(f, Phi).value);
}
BENCHMARK(BM_LuxemburgExpSquare)->Unit(benchmark::kMillisecond);

static void BM_ProcessSpecBuild(benchmark::State& state) {
  const auto nmax = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ProcessSpec::build(1.0, UnitIntervalFunction::constant(1.0), nmax).normalization());
  }
}
BENCHMARK(BM_ProcessSpecBuild)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_SupLpSeriesNearFour(benchmark::State& state) {
  const auto spec = ProcessSpec::build(1.0, UnitIntervalFunction::constant(1.0));
  const double gap = std::ldexp(1.0, -20);
  for (auto _ : state) benchmark::DoNotOptimize(sup_lp_series_at_gap(spec, gap).value);
}
BENCHMARK(BM_SupLpSeriesNearFour)->Unit(benchmark::kMillisecond);

static void BM_TailCurveProcess(benchmark::State& state) {
  const CounterexampleProcess proc(ProcessSpec::build(1.0, UnitIntervalFunction::constant(1.0)));
  const auto batch = SampleBatch::draw(1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tail_curve(proc, {0.5, 1.5, 4.0}, batch).size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TailCurveProcess)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_UnionBoundDyadic(benchmark::State& state) {
  const CounterexampleProcess proc(ProcessSpec::build(1.0, UnitIntervalFunction::constant(1.0)));
  const auto part = Partition::dyadic(proc.spec().nmax());
  const auto batch = SampleBatch::draw(2, 100000);
  for (auto _ : state) benchmark::DoNotOptimize(union_bound_check(proc, part, 1.5, batch).rhs);
}
BENCHMARK(BM_UnionBoundDyadic)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
