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

#ifndef MPU_LINEAR_MODEL_H_
#define MPU_LINEAR_MODEL_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mpu/features.h"

namespace mpu {

// Linear decision function g(x) = w . phi(x) + b over hashed n-grams.
// g > 0 reads as human.
class LinearModel {
 public:
  explicit LinearModel(FeatureConfig config);

  const FeatureConfig& features() const { return config_; }
  std::vector<double>& weights() { return weights_; }
  const std::vector<double>& weights() const { return weights_; }
  double& bias() { return bias_; }
  double bias() const { return bias_; }

  double Score(const SparseVector& x) const;
  double ScoreText(std::string_view text) const;

  friend bool operator==(const LinearModel&, const LinearModel&) = default;

 private:
  FeatureConfig config_;
  std::vector<double> weights_;
  double bias_ = 0.0;
};

// Model file: a JSON document
//   {"format": "mpu-linear-model", "version": 1,
//    "features": {"word_orders": [...], "char_orders": [...], "dim": D,
//                 "lowercase": bool},
//    "bias": b, "weights": [[index, value], ...],   // nonzeros, ascending
//    "train_config_hash": "<16 hex digits>"}
// Doubles are written in shortest round-trip form, so load(save(m)) == m.
struct ModelFile {
  static constexpr int kVersion = 1;
  std::string train_config_hash;
};

void SaveModel(const LinearModel& model, const ModelFile& meta,
               const std::filesystem::path& path);
std::string SerializeModel(const LinearModel& model, const ModelFile& meta);

struct LoadedModel {
  LinearModel model;
  ModelFile meta;
};
// Throws DataError on unreadable or malformed files.
LoadedModel LoadModel(const std::filesystem::path& path);
LoadedModel DeserializeModel(std::string_view contents);

}  // namespace mpu

#endif  // MPU_LINEAR_MODEL_H_
