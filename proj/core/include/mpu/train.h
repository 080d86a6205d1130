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

#ifndef MPU_TRAIN_H_
#define MPU_TRAIN_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "mpu/data.h"
#include "mpu/features.h"
#include "mpu/linear_model.h"
#include "mpu/multiscale.h"
#include "mpu/prior.h"
#include "mpu/puloss.h"

namespace mpu {

enum class MultiscaleSchedule {
  kPerEpoch,  // fresh mask draw every epoch
  kOnce,      // one draw per sample for the whole run
};

struct TrainConfig {
  int epochs = 10;
  int batch_size = 32;
  double learning_rate = 0.1;
  double momentum = 0.9;
  double l2 = 0.0;
  std::uint64_t seed = 0;
  LossConfig loss;
  // Only p_sent is read; the mask stream is keyed by `seed`.
  MultiscaleConfig multiscale;
  MultiscaleSchedule multiscale_schedule = MultiscaleSchedule::kPerEpoch;
  PriorConfig prior;
  FeatureConfig features;
  // Samples with fewer tokens are left out of every update.
  std::optional<int> drop_short_below;

  // Throws ConfigError.
  void Validate() const;
};

struct EpochStats {
  int epoch = 0;
  double train_loss = 0.0;      // mean minibatch total loss
  std::int64_t samples = 0;     // samples that took part in updates
  std::optional<double> dev_f1;
};

struct TrainResult {
  LinearModel model;
  std::vector<EpochStats> history;
};

// Minibatch gradient descent with momentum on PN + gamma * PU risk.
// Per epoch: optional multiscaling (substitution), optional short-text
// drop, a seeded shuffle, then updates. Batches without both classes take
// the PN term only. Fully determined by (corpus, config).
// Throws ConfigError for a single-class corpus or invalid config.
TrainResult Train(const Corpus& corpus, const TrainConfig& config,
                  const Corpus* dev = nullptr);

// Gradient of the mean batch loss (plus l2/2 |w|^2) with respect to the
// weights (dense, size dim) and bias, for examples already featurized.
struct WeightGradient {
  double loss = 0.0;
  std::vector<double> weights;
  double bias = 0.0;
};
struct Example {
  SparseVector features;
  Sign label = Sign::kPositive;
  int length = 1;
};
WeightGradient BatchGradient(const LinearModel& model,
                             const std::vector<Example>& batch,
                             const LossConfig& loss, const PriorTable* table,
                             double l2);

}  // namespace mpu

#endif  // MPU_TRAIN_H_
