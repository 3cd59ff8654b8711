// Copyright 2026 The Authors.
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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "ssmtsp/addressable_pq.h"
#include "ssmtsp/instance.h"
#include "ssmtsp/predict.h"
#include "ssmtsp/predictor.h"
#include "ssmtsp/predictors.h"
#include "ssmtsp/rng.h"
#include "ssmtsp/sssp.h"

namespace ssmtsp {
namespace {

void BM_PqInsertRemove(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Xoshiro256StarStar rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> priorities(n);
  for (double& p : priorities) p = u(rng);
  AddressablePq pq(n);
  for (auto _ : state) {
    for (std::size_t i = 0; i < n; ++i) {
      pq.Insert(static_cast<NodeId>(i), priorities[i]);
    }
    while (!pq.IsEmpty()) benchmark::DoNotOptimize(pq.RemoveMin());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_PqInsertRemove)->Range(64, 1 << 14);

void BM_PqDecreasePrio(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  AddressablePq pq(n);
  for (auto _ : state) {
    state.PauseTiming();
    pq.Clear();
    for (std::size_t i = 0; i < n; ++i) {
      pq.Insert(static_cast<NodeId>(i), 2.0 + static_cast<double>(i));
    }
    state.ResumeTiming();
    for (std::size_t i = n; i-- > 0;) {
      pq.DecreasePrio(static_cast<NodeId>(i), 1.0 - 1.0 / (2.0 + i));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_PqDecreasePrio)->Range(64, 1 << 14);

const std::vector<Instance>& Instances() {
  static const std::vector<Instance> instances = [] {
    GenParams params;
    params.seed = 5;
    return GenerateAcceptedInstances(params, 32);
  }();
  return instances;
}

void BM_Dijkstra(benchmark::State& state) {
  const auto& instances = Instances();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Dijkstra(instances[i++ % instances.size()]).distance);
  }
}
BENCHMARK(BM_Dijkstra);

void BM_DijkstraPruning(benchmark::State& state) {
  const auto& instances = Instances();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(DijkstraPruning(instances[i++ % instances.size()]).distance);
  }
}
BENCHMARK(BM_DijkstraPruning);

void BM_Prediction(benchmark::State& state) {
  PredictConfig config;
  config.restart = state.range(0) ? RestartMode::kSmart : RestartMode::kNaive;
  const ConstantPredictor predictor(0.5);
  const auto& instances = Instances();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        DijkstraPrediction(instances[i++ % instances.size()], predictor, config).distance);
  }
}
BENCHMARK(BM_Prediction)->Arg(0)->Arg(1);

void BM_WeightedBfsPrediction(benchmark::State& state) {
  const auto& instances = Instances();
  std::size_t i = 0;
  for (auto _ : state) {
    const Instance& inst = instances[i++ % instances.size()];
    const WeightedBfsPredictor predictor(inst);
    benchmark::DoNotOptimize(
        DijkstraPrediction(inst, predictor, PredictConfig{}).distance);
  }
}
BENCHMARK(BM_WeightedBfsPrediction);

void BM_Generate(benchmark::State& state) {
  GenParams params;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    params.seed = seed++;
    benchmark::DoNotOptimize(GenerateRandomInstance(params).num_nodes());
  }
}
BENCHMARK(BM_Generate)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ssmtsp

BENCHMARK_MAIN();
