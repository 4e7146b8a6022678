// Copyright 2026 The tempcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "tempcorr/correlations.hpp"
#include "tempcorr/random.hpp"
#include "tempcorr/realize.hpp"
#include "tempcorr/reference.hpp"
#include "tempcorr/witness.hpp"

namespace {

using namespace tempcorr;

const Scenario kEnumScenario{3, 2, 2};

void BM_EnumerateParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertices(kEnumScenario));
}
BENCHMARK(BM_EnumerateParallel)->Unit(benchmark::kMillisecond);

void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_vertices(kEnumScenario));
}
BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);

SystemModel bench_system() {
  Rng rng(9);
  return random_system(4, 2, 2, rng);
}

void BM_FullBehaviorParallel(benchmark::State& state) {
  const SystemModel sys = bench_system();
  for (auto _ : state) benchmark::DoNotOptimize(full_behavior(sys, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FullBehaviorParallel)->Arg(3)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_FullBehaviorSerial(benchmark::State& state) {
  const SystemModel sys = bench_system();
  for (auto _ : state) benchmark::DoNotOptimize(reference::full_behavior(sys, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FullBehaviorSerial)->Arg(3)->Arg(6)->Unit(benchmark::kMicrosecond);

OptimizerConfig bench_config() {
  OptimizerConfig cfg;
  cfg.restarts = 32;
  return cfg;
}

void BM_OptimizeParallel(benchmark::State& state) {
  const WitnessFunctional f = builtin_functional("B3");
  for (auto _ : state) benchmark::DoNotOptimize(optimize_qubit(f, bench_config()));
}
BENCHMARK(BM_OptimizeParallel)->Unit(benchmark::kMillisecond);

void BM_OptimizeSerial(benchmark::State& state) {
  const WitnessFunctional f = builtin_functional("B3");
  for (auto _ : state) benchmark::DoNotOptimize(reference::optimize_qubit(f, bench_config()));
}
BENCHMARK(BM_OptimizeSerial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
