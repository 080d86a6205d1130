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

#include "mpu/features.h"

#include <algorithm>
#include <cmath>

#include "mpu/error.h"
#include "mpu/text.h"

namespace mpu {
namespace {

bool IsAsciiPunct(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (u >= 33 && u <= 47) || (u >= 58 && u <= 64) ||
         (u >= 91 && u <= 96) || (u >= 123 && u <= 126);
}

char AsciiLower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

constexpr std::uint64_t kWordSeed = Fnv1a("w:");
constexpr std::uint64_t kCharSeed = Fnv1a("c:");

}  // namespace

std::vector<std::string> Tokenize(std::string_view text, bool lowercase) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (char c : text) {
    if (IsAsciiSpace(c)) {
      flush();
    } else if (IsAsciiPunct(c)) {
      flush();
      tokens.emplace_back(1, c);
    } else {
      current.push_back(lowercase ? AsciiLower(c) : c);
    }
  }
  flush();
  if (tokens.empty()) throw DataError("cannot tokenize an empty text");
  return tokens;
}

void FeatureConfig::Validate() const {
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw ConfigError("hash dimension must be a power of two, got " +
                      std::to_string(dim));
  }
  if (word_orders.empty() && char_orders.empty()) {
    throw ConfigError("at least one n-gram order must be enabled");
  }
  for (int n : word_orders) {
    if (n < 1) throw ConfigError("word n-gram orders must be >= 1");
  }
  for (int n : char_orders) {
    if (n < 1) throw ConfigError("char n-gram orders must be >= 1");
  }
}

double Dot(const SparseVector& a, const SparseVector& b) {
  double sum = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a.index[i] < b.index[j]) {
      ++i;
    } else if (a.index[i] > b.index[j]) {
      ++j;
    } else {
      sum += a.value[i++] * b.value[j++];
    }
  }
  return sum;
}

double Norm(const SparseVector& v) {
  double sum = 0.0;
  for (double x : v.value) sum += x * x;
  return std::sqrt(sum);
}

SparseVector Featurize(const std::vector<std::string>& tokens,
                       const FeatureConfig& config) {
  const std::uint64_t mask = config.dim - 1;
  std::vector<std::uint32_t> buckets;
  for (int n : config.word_orders) {
    const auto order = static_cast<std::size_t>(n);
    for (std::size_t start = 0; start + order <= tokens.size(); ++start) {
      std::uint64_t h = kWordSeed;
      for (std::size_t k = 0; k < order; ++k) {
        if (k > 0) h = Fnv1a(" ", h);
        h = Fnv1a(tokens[start + k], h);
      }
      buckets.push_back(static_cast<std::uint32_t>(h & mask));
    }
  }
  if (!config.char_orders.empty()) {
    std::string padded;
    for (const std::string& token : tokens) {
      padded.assign("<").append(token).push_back('>');
      const std::string_view view(padded);
      for (int n : config.char_orders) {
        const auto order = static_cast<std::size_t>(n);
        for (std::size_t k = 0; k + order <= view.size(); ++k) {
          const std::uint64_t h = Fnv1a(view.substr(k, order), kCharSeed);
          buckets.push_back(static_cast<std::uint32_t>(h & mask));
        }
      }
    }
  }

  std::sort(buckets.begin(), buckets.end());
  SparseVector out;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < buckets.size();) {
    std::size_t j = i;
    while (j < buckets.size() && buckets[j] == buckets[i]) ++j;
    const auto count = static_cast<double>(j - i);
    out.index.push_back(buckets[i]);
    out.value.push_back(count);
    sum_sq += count * count;
    i = j;
  }
  if (sum_sq > 0.0) {
    const double inv = 1.0 / std::sqrt(sum_sq);
    for (double& v : out.value) v *= inv;
  }
  return out;
}

SparseVector FeaturizeText(std::string_view text, const FeatureConfig& config) {
  return Featurize(Tokenize(text, config.lowercase), config);
}

}  // namespace mpu
