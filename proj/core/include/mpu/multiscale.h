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

// Text multiscaling: split a text into sentences, drop each sentence
// independently with probability p_sent, and rejoin the survivors in their
// original order. The result replaces the source sample and keeps its label.

#ifndef MPU_MULTISCALE_H_
#define MPU_MULTISCALE_H_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mpu/random.h"

namespace mpu {

struct MultiscaleConfig {
  // Probability of discarding a sentence, in [0, 1). Zero disables.
  double p_sent = 0.25;
  std::uint64_t seed = 0;

  void Validate() const;
  bool enabled() const { return p_sent > 0.0; }
};

using SentenceArray = std::vector<std::string>;
// true = keep.
using SentenceMask = std::vector<bool>;
using SentenceSplitter = std::function<SentenceArray(std::string_view)>;

// Splits after . ! ? … 。 ！ ？ when the terminator is followed by
// whitespace or the end of the text. The terminator stays with its
// sentence; sentences are whitespace-normalized and never empty. No
// abbreviation handling: "Mr. Smith" splits after "Mr.".
// Throws DataError for empty or whitespace-only text.
SentenceArray SplitSentences(std::string_view text);

// Independent Bernoulli(1 - p_sent) keep flags. If every flag comes up
// false, one uniformly chosen index is forced to true.
SentenceMask SampleMask(std::size_t n, double p_sent, RandomStream& rng);

// Kept sentences in order, joined by single spaces. Throws
// std::invalid_argument on size mismatch or an all-false mask.
std::string ApplyMask(const SentenceArray& sentences, const SentenceMask& mask);

class Multiscaler {
 public:
  explicit Multiscaler(MultiscaleConfig config,
                       SentenceSplitter splitter = SplitSentences);

  const MultiscaleConfig& config() const { return config_; }

  // One augmentation draw for sample `index` in pass `epoch`; the random
  // stream is keyed by (seed, epoch, index), so calls are independent and
  // order-free. With p_sent == 0 returns the whitespace-normalized text.
  std::string Apply(std::string_view text, std::uint64_t epoch,
                    std::uint64_t index) const;

 private:
  MultiscaleConfig config_;
  SentenceSplitter splitter_;
};

}  // namespace mpu

#endif  // MPU_MULTISCALE_H_
