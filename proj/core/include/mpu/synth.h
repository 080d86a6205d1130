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

// Synthetic human/AI corpus with a controllable short-text overlap.
//
// The vocabulary has V words; the first S are "signal" words that only
// humans use. Every position of a human text is a signal word (uniform over
// the S) with probability q and otherwise a uniform non-signal word. AI text
// uses non-signal words only. A length-l human text is therefore
// signal-free, and indistinguishable from AI text, with probability
// (1 - q)^l: short texts overlap heavily, long texts almost never do.

#ifndef MPU_SYNTH_H_
#define MPU_SYNTH_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "mpu/data.h"
#include "mpu/random.h"

namespace mpu {

struct SynthConfig {
  int vocab_size = 5000;
  int signal_tokens = 50;
  double signal_prob = 0.2;
  // Word-count ranges, inclusive.
  int short_min = 4;
  int short_max = 24;
  int long_min = 64;
  int long_max = 256;
  // Probability that a training text draws its length from the short range.
  double short_fraction = 0.5;
  // A period closes a sentence every sentence_min..sentence_max words.
  int sentence_min = 8;
  int sentence_max = 16;
  int train_per_class = 10000;
  int test_short_per_class = 2000;
  int test_long_per_class = 2000;
  std::uint64_t seed = 1;

  // Throws ConfigError.
  void Validate() const;
};

struct SynthBenchmark {
  Corpus train;
  Corpus test_short;
  Corpus test_long;
};

class SynthGenerator {
 public:
  explicit SynthGenerator(SynthConfig config);

  const SynthConfig& config() const { return config_; }
  const std::vector<std::string>& vocabulary() const { return vocab_; }
  bool IsSignalWord(std::string_view word) const;

  // One text of exactly `words` words (sentence periods are attached to
  // words, not counted).
  std::string GenerateText(Origin origin, int words, RandomStream& rng) const;

  // Mixed-length training corpus, train_per_class records per class.
  Corpus GenerateTrain() const;
  SynthBenchmark GenerateBenchmark() const;

 private:
  enum class LengthBand { kShort, kLong, kMixed };
  Corpus GenerateSet(LengthBand band, int per_class, std::uint64_t domain,
                     std::string_view prefix) const;

  SynthConfig config_;
  std::vector<std::string> vocab_;
  std::unordered_set<std::string> signal_;
};

// True iff the text contains a signal word (after stripping the trailing
// sentence period).
bool ContainsSignal(const SynthGenerator& generator, std::string_view text);

}  // namespace mpu

#endif  // MPU_SYNTH_H_
