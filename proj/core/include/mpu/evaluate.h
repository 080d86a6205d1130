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

// Detection metrics. Machine-generated text is the positive class for
// precision/recall/F1, and a sample is flagged as machine iff its score is
// below zero. No threshold tuning.

#ifndef MPU_EVALUATE_H_
#define MPU_EVALUATE_H_

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "mpu/data.h"
#include "mpu/linear_model.h"

namespace mpu {

struct Confusion {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t tn = 0;

  std::int64_t total() const { return tp + fp + fn + tn; }
  void Add(bool is_machine, bool flagged_machine);
};

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;
};

// Ratios with empty denominators are 0.
Metrics ComputeMetrics(const Confusion& c);

// Half-open token-length range [lo, hi).
struct LengthBucket {
  static constexpr int kInf = std::numeric_limits<int>::max();
  int lo = 0;
  int hi = kInf;

  bool Contains(int length) const { return length >= lo && length < hi; }
  std::string Label() const;  // "lo:hi" or "lo:inf"
};

// Parses "0:32,32:inf". Throws ConfigError on malformed input.
std::vector<LengthBucket> ParseBuckets(std::string_view spec);

struct BucketReport {
  LengthBucket bucket;
  Confusion confusion;
  Metrics metrics;
};

struct EvalReport {
  Confusion confusion;
  Metrics metrics;
  std::vector<BucketReport> buckets;
};

inline bool FlagsMachine(double score) { return score < 0.0; }

// Throws DataError on an empty corpus.
EvalReport Evaluate(const LinearModel& model, const Corpus& corpus,
                    const std::vector<LengthBucket>& buckets = {});

// Metrics JSON: {"f1", "precision", "recall", "accuracy",
//   "confusion": {"tp","fp","fn","tn"},
//   "buckets": [{"range", "lo", "hi" (null for inf), "count", "f1",
//                "precision", "recall", "accuracy", "confusion"}]}
std::string ReportToJson(const EvalReport& report);

}  // namespace mpu

#endif  // MPU_EVALUATE_H_
