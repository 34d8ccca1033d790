// Copyright 2026 The subknap Authors.
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

#include "subknap/bounds.h"
#include "subknap/exact_eval.h"
#include "subknap/generator.h"
#include "subknap/greedy.h"
#include "subknap/robust_policy.h"

namespace subknap {
namespace {

Instance Coverage(int n) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::kCoverage;
  spec.n = n;
  spec.size_max = 20;
  spec.seed = 17;
  return generate_instance(spec).instance;
}

void BM_GreedySequence(benchmark::State& state) {
  const Instance inst = Coverage(static_cast<int>(state.range(0)));
  const Size gamma = inst.total_size() / 2;
  for (auto _ : state) benchmark::DoNotOptimize(greedy_sequence(inst, gamma));
}
BENCHMARK(BM_GreedySequence)->Arg(10)->Arg(50)->Arg(200);

void BM_StartItemList(benchmark::State& state) {
  const Instance inst = Coverage(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(start_item_list(inst));
}
BENCHMARK(BM_StartItemList)->Arg(10)->Arg(50);

void BM_PolicyExecute(benchmark::State& state) {
  const Instance inst = Coverage(static_cast<int>(state.range(0)));
  const RobustPolicy policy(inst);
  const Size gamma = inst.total_size() / 3;
  for (auto _ : state) {
    CapacityFitOracle oracle(gamma);
    benchmark::DoNotOptimize(policy.execute(oracle));
  }
}
BENCHMARK(BM_PolicyExecute)->Arg(10)->Arg(50)->Arg(200);

void BM_BruteForceOpt(benchmark::State& state) {
  const Instance inst = Coverage(static_cast<int>(state.range(0)));
  const Size gamma = inst.total_size() / 2;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_opt(inst, gamma));
}
BENCHMARK(BM_BruteForceOpt)->Arg(10)->Arg(14)->Arg(18);

void BM_RobustnessSweep(benchmark::State& state) {
  const Instance inst = Coverage(static_cast<int>(state.range(0)));
  const SweepOptions options{.parallel = state.range(1) != 0};
  for (auto _ : state) benchmark::DoNotOptimize(robustness_sweep(inst, options));
}
BENCHMARK(BM_RobustnessSweep)->Args({8, 0})->Args({12, 0})->Args({12, 1})->Unit(benchmark::kMillisecond);

void BM_Alpha(benchmark::State& state) {
  int step = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(alpha(step / 1000.0));
    step = step == 1000 ? 0 : step + 1;
  }
}
BENCHMARK(BM_Alpha);

}  // namespace
}  // namespace subknap

BENCHMARK_MAIN();
