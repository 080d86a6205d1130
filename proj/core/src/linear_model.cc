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

#include "mpu/linear_model.h"

#include <utility>

#include "json.hpp"
#include "mpu/error.h"
#include "mpu/io.h"

namespace mpu {
namespace {

using nlohmann::json;

constexpr std::string_view kFormat = "mpu-linear-model";

}  // namespace

LinearModel::LinearModel(FeatureConfig config) : config_(std::move(config)) {
  config_.Validate();
  weights_.assign(config_.dim, 0.0);
}

double LinearModel::Score(const SparseVector& x) const {
  double s = bias_;
  for (std::size_t k = 0; k < x.size(); ++k) {
    s += weights_[x.index[k]] * x.value[k];
  }
  return s;
}

double LinearModel::ScoreText(std::string_view text) const {
  return Score(FeaturizeText(text, config_));
}

std::string SerializeModel(const LinearModel& model, const ModelFile& meta) {
  const FeatureConfig& f = model.features();
  json nonzero = json::array();
  for (std::size_t i = 0; i < model.weights().size(); ++i) {
    if (model.weights()[i] != 0.0) {
      nonzero.push_back(json::array({i, model.weights()[i]}));
    }
  }
  json doc = {
      {"format", kFormat},
      {"version", ModelFile::kVersion},
      {"features",
       {{"word_orders", f.word_orders},
        {"char_orders", f.char_orders},
        {"dim", f.dim},
        {"lowercase", f.lowercase}}},
      {"bias", model.bias()},
      {"weights", std::move(nonzero)},
      {"train_config_hash", meta.train_config_hash},
  };
  return doc.dump() + "\n";
}

void SaveModel(const LinearModel& model, const ModelFile& meta,
               const std::filesystem::path& path) {
  WriteFileAtomic(path, SerializeModel(model, meta));
}

LoadedModel DeserializeModel(std::string_view contents) {
  try {
    const json doc = json::parse(contents);
    if (doc.at("format").get<std::string>() != kFormat) {
      throw DataError("not an mpu model file");
    }
    const int version = doc.at("version").get<int>();
    if (version != ModelFile::kVersion) {
      throw DataError("unsupported model file version " +
                      std::to_string(version));
    }
    FeatureConfig f;
    const json& jf = doc.at("features");
    f.word_orders = jf.at("word_orders").get<std::vector<int>>();
    f.char_orders = jf.at("char_orders").get<std::vector<int>>();
    f.dim = jf.at("dim").get<std::uint32_t>();
    f.lowercase = jf.at("lowercase").get<bool>();

    LoadedModel loaded{LinearModel(f), ModelFile{}};
    loaded.model.bias() = doc.at("bias").get<double>();
    for (const json& entry : doc.at("weights")) {
      const auto index = entry.at(0).get<std::size_t>();
      if (index >= f.dim) throw DataError("weight index out of range");
      loaded.model.weights()[index] = entry.at(1).get<double>();
    }
    loaded.meta.train_config_hash =
        doc.at("train_config_hash").get<std::string>();
    return loaded;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed model file: ") + e.what());
  } catch (const ConfigError& e) {
    throw DataError(std::string("malformed model file: ") + e.what());
  }
}

LoadedModel LoadModel(const std::filesystem::path& path) {
  return DeserializeModel(ReadFile(path));
}

}  // namespace mpu
