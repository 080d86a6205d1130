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

#include "mpu/multiscale.h"

#include <array>
#include <stdexcept>
#include <utility>

#include "mpu/error.h"
#include "mpu/text.h"

namespace mpu {
namespace {

// UTF-8 encodings of the sentence terminators.
constexpr std::array<std::string_view, 7> kTerminators = {
    ".", "!", "?",
    "\xE2\x80\xA6",  // …
    "\xE3\x80\x82",  // 。
    "\xEF\xBC\x81",  // ！
    "\xEF\xBC\x9F",  // ？
};

// Byte length of the terminator starting at text[pos], or 0.
std::size_t TerminatorAt(std::string_view text, std::size_t pos) {
  for (std::string_view t : kTerminators) {
    if (text.substr(pos, t.size()) == t) return t.size();
  }
  return 0;
}

void PushSentence(std::string_view piece, SentenceArray& out) {
  std::string sentence = NormalizeWhitespace(piece);
  if (!sentence.empty()) out.push_back(std::move(sentence));
}

}  // namespace

void MultiscaleConfig::Validate() const {
  if (!(p_sent >= 0.0 && p_sent < 1.0)) {
    throw ConfigError("p_sent must be in [0,1), got " +
                      std::to_string(p_sent));
  }
}

SentenceArray SplitSentences(std::string_view text) {
  if (IsBlank(text)) throw DataError("cannot split an empty text");
  SentenceArray sentences;
  std::size_t start = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t len = TerminatorAt(text, pos);
    if (len == 0) {
      ++pos;
      continue;
    }
    const std::size_t end = pos + len;
    if (end == text.size() || IsAsciiSpace(text[end])) {
      PushSentence(text.substr(start, end - start), sentences);
      start = end;
    }
    pos = end;
  }
  if (start < text.size()) PushSentence(text.substr(start), sentences);
  return sentences;
}

SentenceMask SampleMask(std::size_t n, double p_sent, RandomStream& rng) {
  SentenceMask mask(n);
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    mask[i] = rng.Bernoulli(1.0 - p_sent);
    any = any || mask[i];
  }
  if (!any && n > 0) mask[rng.UniformIndex(n)] = true;
  return mask;
}

std::string ApplyMask(const SentenceArray& sentences,
                      const SentenceMask& mask) {
  if (sentences.size() != mask.size()) {
    throw std::invalid_argument("sentence mask size mismatch");
  }
  std::string out;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (!mask[i]) continue;
    if (!out.empty()) out.push_back(' ');
    out += sentences[i];
  }
  if (out.empty()) throw std::invalid_argument("sentence mask keeps nothing");
  return out;
}

Multiscaler::Multiscaler(MultiscaleConfig config, SentenceSplitter splitter)
    : config_(config), splitter_(std::move(splitter)) {
  config_.Validate();
}

std::string Multiscaler::Apply(std::string_view text, std::uint64_t epoch,
                               std::uint64_t index) const {
  const SentenceArray sentences = splitter_(text);
  if (!config_.enabled()) return ApplyMask(sentences, SentenceMask(sentences.size(), true));
  RandomStream rng = RandomStream::ForKey(config_.seed, epoch, index);
  return ApplyMask(sentences, SampleMask(sentences.size(), config_.p_sent, rng));
}

}  // namespace mpu
