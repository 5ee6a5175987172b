// Copyright 2026 The qblotto Authors
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

#include "qblotto/engine.h"
#include "qblotto/scenario.h"
#include "qblotto/sweep.h"

namespace {

using namespace qblotto;

// Odd player count with every player spreading one soldier per field.
Scenario Uniform(std::size_t players, std::size_t fields) {
  Scenario s;
  s.totals.assign(players, static_cast<double>(fields));
  s.allocations.assign(players, Allocation(fields, 1.0));
  s.gamma = kPi / 3;
  NormalizeScenario(s);
  for (std::size_t j = 0; j < players; ++j) s.phases[j][0] = 0.1 * j;
  return s;
}

void BM_ReferenceGame(benchmark::State& state) {
  const GameSetup setup = PrepareGame(ReferenceScenario());
  for (auto _ : state) benchmark::DoNotOptimize(Evaluate(setup));
}
BENCHMARK(BM_ReferenceGame);

void BM_EvaluateByPlayers(benchmark::State& state) {
  const GameSetup setup =
      PrepareGame(Uniform(static_cast<std::size_t>(state.range(0)), 4));
  for (auto _ : state) benchmark::DoNotOptimize(Evaluate(setup));
}
BENCHMARK(BM_EvaluateByPlayers)
    ->DenseRange(3, 17, 2)
    ->Unit(benchmark::kMillisecond);

void BM_DenseStructureCheck(benchmark::State& state) {
  const GameSetup setup =
      PrepareGame(Uniform(static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(CheckStructure(setup));
}
BENCHMARK(BM_DenseStructureCheck)
    ->DenseRange(3, 7, 2)
    ->Unit(benchmark::kMillisecond);

void BM_PhaseSweep(benchmark::State& state) {
  SweepSpec spec;
  spec.base = ReferenceScenario();
  spec.player = 3;
  spec.battlefield = 1;
  spec.hi = kPi / 2;
  spec.steps = 101;
  spec.locate_transitions = true;
  for (auto _ : state) benchmark::DoNotOptimize(RunSweep(spec));
}
BENCHMARK(BM_PhaseSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
