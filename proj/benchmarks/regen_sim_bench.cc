// Copyright 2026 The limpsim Authors.
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

#include "limpsim/regen_sim.h"

namespace limpsim {
namespace {

void BM_ProtocolTrial(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const std::int64_t total_blocks = 10 * n * (n - 1) / 3;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunProtocolTrials(n, total_blocks, 1, seed++, 1));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ProtocolTrial)->Arg(10)->Arg(30)->Arg(100);

void BM_AssumptionTrials(benchmark::State& state) {
  const RegenParams params{state.range(0), 10 * (state.range(0) - 1)};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunAssumptionTrials(params, 1000, seed++, 1));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_AssumptionTrials)->Arg(10)->Arg(50);

void BM_PlanRegeneration(benchmark::State& state) {
  Engine engine(1);
  const RegenScenario scenario =
      MakeScenario(GeneratePlacement(state.range(0), 10000, engine), 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(PlanRegeneration(scenario, engine));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(scenario.lost_blocks.size()));
}
BENCHMARK(BM_PlanRegeneration)->Arg(30)->Arg(300);

}  // namespace
}  // namespace limpsim
