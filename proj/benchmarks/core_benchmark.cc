//
// Copyright 2026 The LadderLab Authors
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
//

#include <cstdint>
#include <memory>

#include "benchmark/benchmark.h"
#include "ladderlab/analysis.h"
#include "ladderlab/attacks.h"
#include "ladderlab/data.h"
#include "ladderlab/harness.h"
#include "ladderlab/mechanisms.h"
#include "ladderlab/rng.h"

namespace ladderlab {
namespace {

std::shared_ptr<const ValidationSet> FairSet(int64_t n) {
  return std::make_shared<const ValidationSet>(
      SampleValidationSet(*LabelModel::Uniform(static_cast<size_t>(n)), 1));
}

void BM_EmpiricalScore(benchmark::State& state) {
  const int64_t n = state.range(0);
  auto set = FairSet(n);
  Rng rng(2);
  const Prediction pred =
      *Prediction::Create(rng.RandomBits(static_cast<size_t>(n)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(EmpiricalScore(pred, *set));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_EmpiricalScore)->Arg(1000)->Arg(20000);

void BM_LadderSubmit(benchmark::State& state) {
  const int64_t n = state.range(0);
  const auto kind = static_cast<MechanismKind>(state.range(1));
  Leaderboard board = *Leaderboard::Create(
      {kind, *Precision::FromDenominator(100), {}}, FairSet(n));
  Rng rng(3);
  const Prediction pred =
      *Prediction::Create(rng.RandomBits(static_cast<size_t>(n)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(board.Submit(0, pred));
  }
}
BENCHMARK(BM_LadderSubmit)
    ->Args({1000, static_cast<int64_t>(MechanismKind::kSimplifiedLadder)})
    ->Args({1000, static_cast<int64_t>(MechanismKind::kParameterFreeLadder)})
    ->Args({20000, static_cast<int64_t>(MechanismKind::kSimplifiedLadder)});

void BM_BoostingRun(benchmark::State& state) {
  ExperimentSpec spec;
  spec.mechanism = MechanismKind::kFullInformation;
  spec.attack = AttackKind::kBoosting;
  spec.n = 1000;
  spec.rounds = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunTrial(spec, 0));
  }
  state.SetItemsProcessed(state.iterations() * 2 * spec.rounds);
}
BENCHMARK(BM_BoostingRun)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_OptimalPrecision(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(OptimalPrecision(state.range(0), 1000, 1, 0.05));
  }
}
BENCHMARK(BM_OptimalPrecision)->Arg(1000)->Arg(1000000000);

}  // namespace
}  // namespace ladderlab

BENCHMARK_MAIN();
