// Copyright 2026 The photosub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "photosub/engineering.hpp"
#include "photosub/homodyne.hpp"
#include "photosub/measures.hpp"
#include "photosub/phase_space.hpp"
#include "photosub/tomography.hpp"

namespace photosub {
namespace {

void BM_SqueezeOperator(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(squeeze_operator(0.35, dim));
}
BENCHMARK(BM_SqueezeOperator)->Arg(20)->Arg(40)->Arg(80);

void BM_LogNegativity(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const TwoModeState s = split_half(squeezed_vacuum(0.35, 2 * d + 20), d, d);
  for (auto _ : state) benchmark::DoNotOptimize(log_negativity(s));
}
BENCHMARK(BM_LogNegativity)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_DistillDual(benchmark::State& state) {
  const TwoModeState s = split_half(squeezed_vacuum(0.35, 44), 12, 12);
  for (auto _ : state) benchmark::DoNotOptimize(distill(s, DistillationScenario::dual(0.1)));
}
BENCHMARK(BM_DistillDual)->Unit(benchmark::kMillisecond);

void BM_WignerGrid(benchmark::State& state) {
  const DensityMatrix rho = tap_and_click(squeezed_vacuum(0.35, 20), TapChannel{0.05, 1.0, {}}).state;
  const auto axis = linspace(-4.0, 4.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wigner_grid(rho, axis, axis));
}
BENCHMARK(BM_WignerGrid)->Arg(51)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_SampleQuadratures(benchmark::State& state) {
  const DensityMatrix rho = squeezed_vacuum(0.35, 20);
  const auto phases = phase_grid(12);
  for (auto _ : state) benchmark::DoNotOptimize(sample_quadratures(rho, phases, 10000, 1.0, 1));
}
BENCHMARK(BM_SampleQuadratures)->Unit(benchmark::kMillisecond);

void BM_MaxLikIterations(benchmark::State& state) {
  const DensityMatrix rho = squeezed_vacuum(0.35, 20);
  const auto data = sample_quadratures(rho, phase_grid(12), 5000, 1.0, 3);
  const int iterations = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(maxlik_reconstruct(data, MaxLikConfig{10, iterations, 1e-12}));
  state.counters["iterations"] = iterations;
}
BENCHMARK(BM_MaxLikIterations)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace photosub

BENCHMARK_MAIN();
