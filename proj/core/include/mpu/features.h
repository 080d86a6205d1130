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

// Tokenizer and hashed n-gram featurizer.

#ifndef MPU_FEATURES_H_
#define MPU_FEATURES_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mpu {

// Splits on ASCII whitespace; every ASCII punctuation character becomes a
// token of its own. Bytes >= 0x80 are word characters. The token count is
// the text length l used for prior lookup.
// Throws DataError if the text has no tokens.
std::vector<std::string> Tokenize(std::string_view text, bool lowercase = true);

inline int TokenLength(std::string_view text, bool lowercase = true) {
  return static_cast<int>(Tokenize(text, lowercase).size());
}

// 64-bit FNV-1a.
constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;
constexpr std::uint64_t Fnv1a(std::string_view bytes,
                              std::uint64_t h = kFnvOffset) {
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= kFnvPrime;
  }
  return h;
}

struct FeatureConfig {
  std::vector<int> word_orders = {1, 2};
  std::vector<int> char_orders = {3};
  // Number of hash buckets; a power of two.
  std::uint32_t dim = 1u << 18;
  bool lowercase = true;

  // Throws ConfigError.
  void Validate() const;
  friend bool operator==(const FeatureConfig&, const FeatureConfig&) = default;
};

// Sorted, duplicate-free sparse vector.
struct SparseVector {
  std::vector<std::uint32_t> index;
  std::vector<double> value;

  std::size_t size() const { return index.size(); }
};

double Dot(const SparseVector& a, const SparseVector& b);
double Norm(const SparseVector& v);

// Hashed n-gram counts, L2-normalized. Feature keys are hashed with FNV-1a:
//   word n-gram:  "w:" + tokens joined by ' '
//   char n-gram:  "c:" + n bytes of "<" + token + ">"
// and bucket = hash mod dim.
SparseVector Featurize(const std::vector<std::string>& tokens,
                       const FeatureConfig& config);
SparseVector FeaturizeText(std::string_view text, const FeatureConfig& config);

}  // namespace mpu

#endif  // MPU_FEATURES_H_
