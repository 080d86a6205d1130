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

#ifndef MPU_DATA_H_
#define MPU_DATA_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpu/puloss.h"

namespace mpu {

// Human text is the positive class of the PU formulation.
enum class Origin { kHuman, kAi };

std::string_view ToString(Origin origin);
std::optional<Origin> ParseOrigin(std::string_view name);
inline Sign ToSign(Origin origin) {
  return origin == Origin::kHuman ? Sign::kPositive : Sign::kNegative;
}

struct Record {
  std::string text;
  Origin label = Origin::kHuman;
  std::optional<std::string> id;

  friend bool operator==(const Record&, const Record&) = default;
};

using Corpus = std::vector<Record>;

struct LineError {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct LoadResult {
  Corpus records;
  std::vector<LineError> errors;
};

// Parses JSONL: one object per line with string keys "text" and "label"
// ("human" or "ai") and an optional string "id". Blank lines are skipped.
// Bad lines are collected in `errors`; a DataError is thrown if the stream
// contains lines but none of them parse.
LoadResult ParseJsonl(std::istream& in);
LoadResult LoadJsonl(const std::filesystem::path& path);

// One JSON object per record, keys in the order text, label, id.
void WriteJsonl(std::ostream& out, const Corpus& records);

// Characters whose preceding whitespace CleanSpaces removes.
inline constexpr std::string_view kCleanPunctuation = ".,!?;:'\")";

// Deletes every whitespace run that sits directly before a character in
// `punctuation`. Idempotent; the non-whitespace characters are untouched.
std::string CleanSpaces(std::string_view text,
                        std::string_view punctuation = kCleanPunctuation);

struct CorpusSplit {
  Corpus train;
  Corpus dev;
  Corpus test;
};

// Stratified, seeded split. Each label is shuffled on its own, the classes
// are interleaved proportionally, and the merged order is cut at sizes
// given by largest-remainder rounding of fractions * n. Every split's label
// counts are within one record of exact proportionality.
// Throws ConfigError if fractions are not positive summing to 1, or there
// are fewer records than splits.
CorpusSplit SplitCorpus(const Corpus& records,
                        const std::array<double, 3>& fractions,
                        std::uint64_t seed);

}  // namespace mpu

#endif  // MPU_DATA_H_
