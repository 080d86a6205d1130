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

#include "mpu/evaluate.h"

#include <charconv>

#include "json.hpp"
#include "mpu/error.h"

namespace mpu {
namespace {

using nlohmann::json;

double Ratio(std::int64_t num, std::int64_t den) {
  return den > 0 ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
}

int ParseBound(std::string_view text, std::string_view spec) {
  if (text == "inf") return LengthBucket::kInf;
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    throw ConfigError("bad bucket bound '" + std::string(text) + "' in '" +
                      std::string(spec) + "'");
  }
  return value;
}

json ConfusionJson(const Confusion& c) {
  return {{"tp", c.tp}, {"fp", c.fp}, {"fn", c.fn}, {"tn", c.tn}};
}

}  // namespace

void Confusion::Add(bool is_machine, bool flagged_machine) {
  if (is_machine) {
    ++(flagged_machine ? tp : fn);
  } else {
    ++(flagged_machine ? fp : tn);
  }
}

Metrics ComputeMetrics(const Confusion& c) {
  Metrics m;
  m.precision = Ratio(c.tp, c.tp + c.fp);
  m.recall = Ratio(c.tp, c.tp + c.fn);
  m.f1 = m.precision + m.recall > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  m.accuracy = Ratio(c.tp + c.tn, c.total());
  return m;
}

std::string LengthBucket::Label() const {
  return std::to_string(lo) + ":" +
         (hi == kInf ? std::string("inf") : std::to_string(hi));
}

std::vector<LengthBucket> ParseBuckets(std::string_view spec) {
  std::vector<LengthBucket> buckets;
  if (spec.empty()) return buckets;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    const std::string_view item = spec.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ConfigError("bucket '" + std::string(item) + "' must be lo:hi");
    }
    LengthBucket b;
    b.lo = ParseBound(item.substr(0, colon), spec);
    b.hi = ParseBound(item.substr(colon + 1), spec);
    if (b.lo == LengthBucket::kInf || b.hi <= b.lo) {
      throw ConfigError("bucket '" + std::string(item) + "' is empty");
    }
    buckets.push_back(b);
    pos = comma + 1;
  }
  return buckets;
}

EvalReport Evaluate(const LinearModel& model, const Corpus& corpus,
                    const std::vector<LengthBucket>& buckets) {
  if (corpus.empty()) throw DataError("cannot evaluate an empty corpus");
  EvalReport report;
  for (const LengthBucket& b : buckets) report.buckets.push_back({b, {}, {}});
  const bool lowercase = model.features().lowercase;
  for (const Record& r : corpus) {
    const std::vector<std::string> tokens = Tokenize(r.text, lowercase);
    const double score = model.Score(Featurize(tokens, model.features()));
    const bool is_machine = r.label == Origin::kAi;
    const bool flagged = FlagsMachine(score);
    report.confusion.Add(is_machine, flagged);
    const int length = static_cast<int>(tokens.size());
    for (BucketReport& br : report.buckets) {
      if (br.bucket.Contains(length)) br.confusion.Add(is_machine, flagged);
    }
  }
  report.metrics = ComputeMetrics(report.confusion);
  for (BucketReport& br : report.buckets) {
    br.metrics = ComputeMetrics(br.confusion);
  }
  return report;
}

std::string ReportToJson(const EvalReport& report) {
  json buckets = json::array();
  for (const BucketReport& br : report.buckets) {
    buckets.push_back({
        {"range", br.bucket.Label()},
        {"lo", br.bucket.lo},
        {"hi", br.bucket.hi == LengthBucket::kInf ? json(nullptr)
                                                  : json(br.bucket.hi)},
        {"count", br.confusion.total()},
        {"f1", br.metrics.f1},
        {"precision", br.metrics.precision},
        {"recall", br.metrics.recall},
        {"accuracy", br.metrics.accuracy},
        {"confusion", ConfusionJson(br.confusion)},
    });
  }
  const json doc = {
      {"f1", report.metrics.f1},
      {"precision", report.metrics.precision},
      {"recall", report.metrics.recall},
      {"accuracy", report.metrics.accuracy},
      {"confusion", ConfusionJson(report.confusion)},
      {"buckets", std::move(buckets)},
  };
  return doc.dump(2) + "\n";
}

}  // namespace mpu
