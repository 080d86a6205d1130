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

#include "run_config.h"

#include <set>

#include "json.hpp"
#include "mpu/error.h"
#include "mpu/io.h"

namespace mpu::cli {
namespace {

using nlohmann::json;

json ParseObject(std::string_view text, std::string_view what) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string(what) + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError(std::string(what) + " must be a JSON object");
  }
  const auto version = doc.find("schema_version");
  if (version == doc.end()) {
    throw ConfigError(std::string(what) + ": missing schema_version");
  }
  if (!version->is_number_integer() || version->get<int>() != kSchemaVersion) {
    throw ConfigError(std::string(what) + ": unsupported schema_version " +
                      version->dump());
  }
  return doc;
}

void RejectUnknownKeys(const json& doc, const std::set<std::string>& known,
                       std::string_view what) {
  for (const auto& [key, value] : doc.items()) {
    if (key != "schema_version" && !known.contains(key)) {
      throw ConfigError(std::string(what) + ": unknown key '" + key + "'");
    }
  }
}

// Reads doc[key] into `out` when present, with a typed error message.
template <typename T>
void Read(const json& doc, const char* key, T& out) {
  const auto it = doc.find(key);
  if (it == doc.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config key '") + key +
                      "' has the wrong type: " + it->dump());
  }
}

const std::set<std::string> kRunKeys = {
    "gamma",         "pu_variant",   "prior_mode",       "constant_prior",
    "token_positive_p", "l_max",     "surrogate",        "p_sent",
    "multiscale_schedule", "epochs", "batch_size",       "learning_rate",
    "momentum",      "l2",           "seed",             "drop_short_below",
    "word_ngrams",   "char_ngrams",  "hash_dim",         "lowercase"};

const std::set<std::string> kSynthKeys = {
    "vocab_size",    "signal_tokens", "signal_prob",   "short_min",
    "short_max",     "long_min",      "long_max",      "short_fraction",
    "sentence_min",  "sentence_max",  "train_per_class",
    "test_short_per_class", "test_long_per_class", "seed"};

MultiscaleSchedule ParseSchedule(std::string_view name) {
  if (name == "per_epoch") return MultiscaleSchedule::kPerEpoch;
  if (name == "once") return MultiscaleSchedule::kOnce;
  throw ConfigError("unknown multiscale_schedule '" + std::string(name) +
                    "' (expected per_epoch|once)");
}

}  // namespace

TrainConfig ParseRunConfig(std::string_view json_text) {
  const json doc = ParseObject(json_text, "run config");
  RejectUnknownKeys(doc, kRunKeys, "run config");
  TrainConfig c;
  std::string name;

  Read(doc, "gamma", c.loss.gamma);
  name = std::string(ToString(c.loss.variant));
  Read(doc, "pu_variant", name);
  c.loss.variant = ParsePuVariant(name);
  name = std::string(ToString(c.loss.prior_mode));
  Read(doc, "prior_mode", name);
  c.loss.prior_mode = ParsePriorMode(name);
  Read(doc, "constant_prior", c.loss.constant_prior);
  name = std::string(ToString(c.loss.surrogate.kind()));
  Read(doc, "surrogate", name);
  c.loss.surrogate = SurrogateLoss(ParseSurrogateKind(name));
  Read(doc, "token_positive_p", c.prior.p);
  Read(doc, "l_max", c.prior.l_max);

  Read(doc, "p_sent", c.multiscale.p_sent);
  name = "per_epoch";
  Read(doc, "multiscale_schedule", name);
  c.multiscale_schedule = ParseSchedule(name);

  Read(doc, "epochs", c.epochs);
  Read(doc, "batch_size", c.batch_size);
  Read(doc, "learning_rate", c.learning_rate);
  Read(doc, "momentum", c.momentum);
  Read(doc, "l2", c.l2);
  Read(doc, "seed", c.seed);
  if (const auto it = doc.find("drop_short_below");
      it != doc.end() && !it->is_null()) {
    int threshold = 0;
    Read(doc, "drop_short_below", threshold);
    c.drop_short_below = threshold;
  }

  Read(doc, "word_ngrams", c.features.word_orders);
  Read(doc, "char_ngrams", c.features.char_orders);
  Read(doc, "hash_dim", c.features.dim);
  Read(doc, "lowercase", c.features.lowercase);

  c.Validate();
  return c;
}

std::string RunConfigToJson(const TrainConfig& c) {
  json doc = {
      {"schema_version", kSchemaVersion},
      {"gamma", c.loss.gamma},
      {"pu_variant", ToString(c.loss.variant)},
      {"prior_mode", ToString(c.loss.prior_mode)},
      {"constant_prior", c.loss.constant_prior},
      {"surrogate", ToString(c.loss.surrogate.kind())},
      {"token_positive_p", c.prior.p},
      {"l_max", c.prior.l_max},
      {"p_sent", c.multiscale.p_sent},
      {"multiscale_schedule",
       c.multiscale_schedule == MultiscaleSchedule::kOnce ? "once"
                                                          : "per_epoch"},
      {"epochs", c.epochs},
      {"batch_size", c.batch_size},
      {"learning_rate", c.learning_rate},
      {"momentum", c.momentum},
      {"l2", c.l2},
      {"seed", c.seed},
      {"drop_short_below",
       c.drop_short_below ? json(*c.drop_short_below) : json(nullptr)},
      {"word_ngrams", c.features.word_orders},
      {"char_ngrams", c.features.char_orders},
      {"hash_dim", c.features.dim},
      {"lowercase", c.features.lowercase},
  };
  return doc.dump(2) + "\n";
}

std::string RunConfigHash(const TrainConfig& config) {
  return HashHex(RunConfigToJson(config));
}

SynthConfig ParseSynthConfig(std::string_view json_text) {
  const json doc = ParseObject(json_text, "synth config");
  RejectUnknownKeys(doc, kSynthKeys, "synth config");
  SynthConfig c;
  Read(doc, "vocab_size", c.vocab_size);
  Read(doc, "signal_tokens", c.signal_tokens);
  Read(doc, "signal_prob", c.signal_prob);
  Read(doc, "short_min", c.short_min);
  Read(doc, "short_max", c.short_max);
  Read(doc, "long_min", c.long_min);
  Read(doc, "long_max", c.long_max);
  Read(doc, "short_fraction", c.short_fraction);
  Read(doc, "sentence_min", c.sentence_min);
  Read(doc, "sentence_max", c.sentence_max);
  Read(doc, "train_per_class", c.train_per_class);
  Read(doc, "test_short_per_class", c.test_short_per_class);
  Read(doc, "test_long_per_class", c.test_long_per_class);
  Read(doc, "seed", c.seed);
  c.Validate();
  return c;
}

std::string SynthConfigToJson(const SynthConfig& c) {
  const json doc = {
      {"schema_version", kSchemaVersion},
      {"vocab_size", c.vocab_size},
      {"signal_tokens", c.signal_tokens},
      {"signal_prob", c.signal_prob},
      {"short_min", c.short_min},
      {"short_max", c.short_max},
      {"long_min", c.long_min},
      {"long_max", c.long_max},
      {"short_fraction", c.short_fraction},
      {"sentence_min", c.sentence_min},
      {"sentence_max", c.sentence_max},
      {"train_per_class", c.train_per_class},
      {"test_short_per_class", c.test_short_per_class},
      {"test_long_per_class", c.test_long_per_class},
      {"seed", c.seed},
  };
  return doc.dump(2) + "\n";
}

}  // namespace mpu::cli
