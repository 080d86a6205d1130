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

#include "mpu/synth.h"

#include <string>

#include "mpu/error.h"
#include "mpu/text.h"

namespace mpu {
namespace {

constexpr std::uint64_t kVocabSalt = 0x766f636162ULL;

// Deterministic pseudo-word for vocabulary slot `index`: 3 to 7 lowercase
// letters. `attempt` perturbs the draw on collisions.
std::string MakeWord(std::uint64_t index, std::uint64_t attempt) {
  std::uint64_t h = MixBits(kVocabSalt ^ MixBits(index) ^ (attempt << 40));
  const int length = 3 + static_cast<int>(h % 5);
  std::string word;
  for (int i = 0; i < length; ++i) {
    h = MixBits(h);
    word.push_back(static_cast<char>('a' + h % 26));
  }
  return word;
}

int UniformInt(RandomStream& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.UniformIndex(
                  static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace

void SynthConfig::Validate() const {
  if (vocab_size < 2) throw ConfigError("vocab_size must be >= 2");
  if (signal_tokens < 1 || signal_tokens >= vocab_size) {
    throw ConfigError("signal_tokens must be in [1, vocab_size)");
  }
  if (!(signal_prob >= 0.0 && signal_prob <= 1.0)) {
    throw ConfigError("signal_prob must be in [0,1]");
  }
  if (short_min < 1 || short_max < short_min) {
    throw ConfigError("short length range is invalid");
  }
  if (long_min < 1 || long_max < long_min) {
    throw ConfigError("long length range is invalid");
  }
  if (!(short_fraction >= 0.0 && short_fraction <= 1.0)) {
    throw ConfigError("short_fraction must be in [0,1]");
  }
  if (sentence_min < 1 || sentence_max < sentence_min) {
    throw ConfigError("sentence length range is invalid");
  }
  if (train_per_class < 1 || test_short_per_class < 1 ||
      test_long_per_class < 1) {
    throw ConfigError("sample counts must be positive");
  }
}

SynthGenerator::SynthGenerator(SynthConfig config) : config_(config) {
  config_.Validate();
  std::unordered_set<std::string> seen;
  vocab_.reserve(config_.vocab_size);
  for (int i = 0; i < config_.vocab_size; ++i) {
    std::uint64_t attempt = 0;
    std::string word = MakeWord(i, attempt);
    while (!seen.insert(word).second) word = MakeWord(i, ++attempt);
    vocab_.push_back(std::move(word));
  }
  for (int i = 0; i < config_.signal_tokens; ++i) signal_.insert(vocab_[i]);
}

bool SynthGenerator::IsSignalWord(std::string_view word) const {
  return signal_.contains(std::string(word));
}

std::string SynthGenerator::GenerateText(Origin origin, int words,
                                         RandomStream& rng) const {
  const auto signal = static_cast<std::uint64_t>(config_.signal_tokens);
  const auto others = static_cast<std::uint64_t>(config_.vocab_size) - signal;
  std::string text;
  int next_break = UniformInt(rng, config_.sentence_min, config_.sentence_max);
  for (int i = 0; i < words; ++i) {
    std::uint64_t slot;
    if (origin == Origin::kHuman && rng.Bernoulli(config_.signal_prob)) {
      slot = rng.UniformIndex(signal);
    } else {
      slot = signal + rng.UniformIndex(others);
    }
    if (!text.empty()) text.push_back(' ');
    text += vocab_[slot];
    if (i + 1 == next_break || i + 1 == words) {
      text.push_back('.');
      next_break +=
          UniformInt(rng, config_.sentence_min, config_.sentence_max);
    }
  }
  return text;
}

Corpus SynthGenerator::GenerateSet(LengthBand band, int per_class,
                                   std::uint64_t domain,
                                   std::string_view prefix) const {
  Corpus out;
  out.reserve(static_cast<std::size_t>(per_class) * 2);
  for (Origin origin : {Origin::kHuman, Origin::kAi}) {
    const std::uint64_t cls = origin == Origin::kHuman ? 0 : 1;
    for (int k = 0; k < per_class; ++k) {
      RandomStream rng = RandomStream::ForKey(config_.seed, domain * 2 + cls,
                                              static_cast<std::uint64_t>(k));
      bool is_short = band == LengthBand::kShort;
      if (band == LengthBand::kMixed) {
        is_short = rng.Bernoulli(config_.short_fraction);
      }
      const int words =
          is_short ? UniformInt(rng, config_.short_min, config_.short_max)
                   : UniformInt(rng, config_.long_min, config_.long_max);
      Record record;
      record.text = GenerateText(origin, words, rng);
      record.label = origin;
      record.id = std::string(prefix) + "-" +
                  std::string(ToString(origin)) + "-" + std::to_string(k);
      out.push_back(std::move(record));
    }
  }
  return out;
}

Corpus SynthGenerator::GenerateTrain() const {
  return GenerateSet(LengthBand::kMixed, config_.train_per_class, 1, "train");
}

SynthBenchmark SynthGenerator::GenerateBenchmark() const {
  SynthBenchmark bench;
  bench.train = GenerateTrain();
  bench.test_short = GenerateSet(LengthBand::kShort,
                                 config_.test_short_per_class, 2, "short");
  bench.test_long =
      GenerateSet(LengthBand::kLong, config_.test_long_per_class, 3, "long");
  return bench;
}

bool ContainsSignal(const SynthGenerator& generator, std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && IsAsciiSpace(text[pos])) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !IsAsciiSpace(text[end])) ++end;
    std::string_view word = text.substr(pos, end - pos);
    if (!word.empty() && word.back() == '.') word.remove_suffix(1);
    if (!word.empty() && generator.IsSignalWord(word)) return true;
    pos = end;
  }
  return false;
}

}  // namespace mpu
