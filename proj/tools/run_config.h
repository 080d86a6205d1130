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

// Flat JSON run configuration.
//
//   {"schema_version": 1,
//    "gamma": 0.4, "pu_variant": "nnpu", "prior_mode": "multiscale",
//    "constant_prior": 0.2, "token_positive_p": 0.2, "l_max": 512,
//    "surrogate": "sigmoid",
//    "p_sent": 0.25, "multiscale_schedule": "per_epoch",
//    "epochs": 10, "batch_size": 32, "learning_rate": 0.1, "momentum": 0.9,
//    "l2": 0.0, "seed": 0, "drop_short_below": null,
//    "word_ngrams": [1, 2], "char_ngrams": [3], "hash_dim": 262144,
//    "lowercase": true}
//
// Every key except schema_version is optional; unknown keys are rejected.

#ifndef MPU_TOOLS_RUN_CONFIG_H_
#define MPU_TOOLS_RUN_CONFIG_H_

#include <string>
#include <string_view>

#include "mpu/synth.h"
#include "mpu/train.h"

namespace mpu::cli {

inline constexpr int kSchemaVersion = 1;

// Throws ConfigError.
TrainConfig ParseRunConfig(std::string_view json_text);
// Canonical document with every key resolved.
std::string RunConfigToJson(const TrainConfig& config);
// Hash of the canonical document.
std::string RunConfigHash(const TrainConfig& config);

// Synthetic corpus config: schema_version plus the SynthConfig fields by
// name (vocab_size, signal_tokens, signal_prob, short_min, short_max,
// long_min, long_max, short_fraction, sentence_min, sentence_max,
// train_per_class, test_short_per_class, test_long_per_class, seed).
SynthConfig ParseSynthConfig(std::string_view json_text);
std::string SynthConfigToJson(const SynthConfig& config);

}  // namespace mpu::cli

#endif  // MPU_TOOLS_RUN_CONFIG_H_
