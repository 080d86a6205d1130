// Copyright 2026 The MPU Detector Authors.
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

#include <vector>

#include "mpu/features.h"
#include "mpu/linear_model.h"
#include "mpu/multiscale.h"
#include "mpu/prior.h"
#include "mpu/puloss.h"
#include "mpu/random.h"
#include "mpu/synth.h"
#include "mpu/train.h"

namespace mpu {
namespace {

void BM_PriorTableBuild(benchmark::State& state) {
  const PriorConfig config{0.2, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(PriorTable::Build(config));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PriorTableBuild)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_PriorExact(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(PriorExact(l, 0.2));
}
BENCHMARK(BM_PriorExact)->Arg(32)->Arg(512);

std::string SampleText(int words) {
  SynthGenerator g(SynthConfig{});
  RandomStream rng(1);
  return g.GenerateText(Origin::kHuman, words, rng);
}

void BM_Featurize(benchmark::State& state) {
  const std::string text = SampleText(static_cast<int>(state.range(0)));
  const FeatureConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(FeaturizeText(text, config));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_Featurize)->Arg(16)->Arg(256);

void BM_Multiscale(benchmark::State& state) {
  const std::string text = SampleText(256);
  const Multiscaler m(MultiscaleConfig{0.25, 3});
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(m.Apply(text, 0, i++));
}
BENCHMARK(BM_Multiscale);

void BM_TotalLossGradient(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(2);
  std::vector<double> z(n);
  std::vector<Sign> y(n);
  std::vector<int> len(n);
  for (int i = 0; i < n; ++i) {
    z[i] = rng.NextUniform() * 8 - 4;
    y[i] = i % 2 ? Sign::kNegative : Sign::kPositive;
    len[i] = 1 + static_cast<int>(rng.UniformIndex(300));
  }
  const PriorTable table = PriorTable::Build({0.2, 512});
  const LossConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(TotalLossGradient({z, y, len}, config, &table));
  }
}
BENCHMARK(BM_TotalLossGradient)->Arg(32)->Arg(256);

void BM_TrainEpoch(benchmark::State& state) {
  SynthConfig sc;
  sc.train_per_class = 1000;
  const Corpus corpus = SynthGenerator(sc).GenerateTrain();
  TrainConfig config;
  config.epochs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(Train(corpus, config));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_TrainEpoch)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace mpu
BENCHMARK_MAIN();
