// Copyright 2026 The plbr Authors
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

#include "plbr/br_engine.h"
#include "plbr/dynamics.h"
#include "plbr/mc_oracle.h"

namespace plbr {
namespace {

// Opponent with `pieces` linear pieces on [0, 1], slopes alternating in sign.
Strategy Zigzag(int pieces) {
  std::vector<Rational> cuts;
  std::vector<LinearFunc> fs{{0, 0}};
  for (int k = 0; k <= pieces; ++k) cuts.push_back(Rational(k, pieces));
  for (int k = 0; k < pieces; ++k) {
    fs.push_back({k % 2 == 0 ? Rational(1) : Rational(1, 3), Rational(k, 4 * pieces)});
  }
  fs.push_back({0, 0});
  return Strategy(cuts, fs);
}

void BM_BestResponseFirstPrice(benchmark::State& state) {
  const GameDefinition g = Registry("fpsb");
  const Strategy opp = Zigzag(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(BestResponse(g, 0, opp));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BestResponseFirstPrice)->RangeMultiplier(2)->Range(1, 32)->Complexity();

void BM_BestResponseSupplyChain(benchmark::State& state) {
  const GameDefinition g = Registry("supply_chain", {{"v", 2}});
  const Strategy opp = Seed("supply-start", g);
  for (auto _ : state) benchmark::DoNotOptimize(BestResponse(g, 0, opp));
}
BENCHMARK(BM_BestResponseSupplyChain);

void BM_IterateBargaining(benchmark::State& state) {
  const GameDefinition g = Registry("bargaining");
  const Profile seeds = NamedProfile("truthful", g);
  IterationConfig cfg;
  cfg.verify_grid = 0;
  for (auto _ : state) benchmark::DoNotOptimize(IterateAsymmetric(g, seeds, cfg));
}
BENCHMARK(BM_IterateBargaining)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  const GameDefinition g = Registry("shared_good");
  const Profile profile = NamedProfile("shared-good", g);
  const auto grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Verify(g, profile, grid));
}
BENCHMARK(BM_Verify)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_MonteCarloExpectedUtility(benchmark::State& state) {
  const GameDefinition g = Registry("fpsb");
  const Strategy opp = Zigzag(4);
  McConfig cfg;
  cfg.samples_per_cell = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        MonteCarloExpectedUtility(g, 0, opp, Rational(3, 4), Rational(3, 8), cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloExpectedUtility)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace plbr

BENCHMARK_MAIN();
