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

#include "mpu/data.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <span>
#include <variant>

#include "json.hpp"
#include "mpu/error.h"
#include "mpu/random.h"
#include "mpu/text.h"

namespace mpu {
namespace {

using nlohmann::json;

// Returns the parsed record or the reason the line was rejected.
std::variant<Record, std::string> ParseLine(std::string_view line) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::parse_error& e) {
    return std::string("malformed JSON: ") + e.what();
  }
  if (!doc.is_object()) return std::string("expected a JSON object");
  Record record;
  const auto text = doc.find("text");
  if (text == doc.end()) return std::string("missing key 'text'");
  if (!text->is_string()) return std::string("'text' must be a string");
  record.text = text->get<std::string>();
  if (IsBlank(record.text)) return std::string("empty text");

  const auto label = doc.find("label");
  if (label == doc.end()) return std::string("missing key 'label'");
  if (!label->is_string()) return std::string("'label' must be a string");
  const auto origin = ParseOrigin(label->get<std::string>());
  if (!origin) {
    return "unknown label '" + label->get<std::string>() +
           "' (expected human|ai)";
  }
  record.label = *origin;

  if (const auto id = doc.find("id"); id != doc.end() && !id->is_null()) {
    if (!id->is_string()) return std::string("'id' must be a string");
    record.id = id->get<std::string>();
  }
  return record;
}

// Sizes summing to n, proportional to fractions (largest remainder).
std::vector<std::size_t> AllocateSizes(std::size_t n,
                                       std::span<const double> fractions) {
  std::vector<std::size_t> sizes(fractions.size());
  std::vector<double> remainders(fractions.size());
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    const double exact = fractions[i] * static_cast<double>(n);
    sizes[i] = static_cast<std::size_t>(std::floor(exact));
    remainders[i] = exact - std::floor(exact);
    assigned += sizes[i];
  }
  std::vector<std::size_t> order(fractions.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainders[a] > remainders[b];
  });
  for (std::size_t k = 0; assigned < n; ++k, ++assigned) {
    ++sizes[order[k % order.size()]];
  }
  return sizes;
}

}  // namespace

std::string_view ToString(Origin origin) {
  return origin == Origin::kHuman ? "human" : "ai";
}

std::optional<Origin> ParseOrigin(std::string_view name) {
  if (name == "human") return Origin::kHuman;
  if (name == "ai") return Origin::kAi;
  return std::nullopt;
}

LoadResult ParseJsonl(std::istream& in) {
  LoadResult result;
  std::string line;
  std::size_t line_no = 0;
  std::size_t nonblank = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (IsBlank(line)) continue;
    ++nonblank;
    auto parsed = ParseLine(line);
    if (auto* record = std::get_if<Record>(&parsed)) {
      result.records.push_back(std::move(*record));
    } else {
      result.errors.push_back({line_no, std::get<std::string>(parsed)});
    }
  }
  if (nonblank > 0 && result.records.empty()) {
    std::string message = "no valid records (" +
                          std::to_string(result.errors.size()) +
                          " bad lines); first error at line " +
                          std::to_string(result.errors.front().line) + ": " +
                          result.errors.front().message;
    throw DataError(message);
  }
  return result;
}

LoadResult LoadJsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  try {
    return ParseJsonl(in);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void WriteJsonl(std::ostream& out, const Corpus& records) {
  // Fixed key order (text, label, id) rather than nlohmann's sorted keys.
  for (const Record& r : records) {
    out << "{\"text\":" << json(r.text).dump() << ",\"label\":"
        << json(std::string(ToString(r.label))).dump();
    if (r.id) out << ",\"id\":" << json(*r.id).dump();
    out << "}\n";
  }
}

std::string CleanSpaces(std::string_view text, std::string_view punctuation) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (!IsAsciiSpace(text[i])) {
      out.push_back(text[i++]);
      continue;
    }
    std::size_t run_end = i;
    while (run_end < text.size() && IsAsciiSpace(text[run_end])) ++run_end;
    const bool before_punct =
        run_end < text.size() &&
        punctuation.find(text[run_end]) != std::string_view::npos;
    if (!before_punct) out.append(text.substr(i, run_end - i));
    i = run_end;
  }
  return out;
}

CorpusSplit SplitCorpus(const Corpus& records,
                        const std::array<double, 3>& fractions,
                        std::uint64_t seed) {
  double total = 0.0;
  for (double f : fractions) {
    if (!(f > 0.0)) throw ConfigError("split fractions must be positive");
    total += f;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ConfigError("split fractions must sum to 1, got " +
                      std::to_string(total));
  }
  if (records.size() < fractions.size()) {
    throw ConfigError("cannot split " + std::to_string(records.size()) +
                      " records into " + std::to_string(fractions.size()) +
                      " parts");
  }

  // Per-class shuffled index lists.
  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i = 0; i < records.size(); ++i) {
    by_class[records[i].label == Origin::kHuman ? 0 : 1].push_back(i);
  }
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    RandomStream rng = RandomStream::ForKey(seed, 0x5b1, c);
    rng.Shuffle(std::span<std::size_t>(by_class[c]));
  }

  // Interleave: member r of a class of size m sits at position (r + 0.5)/m.
  struct Slot {
    double key;
    std::size_t cls;
    std::size_t index;
  };
  std::vector<Slot> merged;
  merged.reserve(records.size());
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    const double m = static_cast<double>(by_class[c].size());
    for (std::size_t r = 0; r < by_class[c].size(); ++r) {
      merged.push_back({(static_cast<double>(r) + 0.5) / m, c, by_class[c][r]});
    }
  }
  std::sort(merged.begin(), merged.end(), [](const Slot& a, const Slot& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.cls < b.cls;
  });

  const std::vector<std::size_t> sizes =
      AllocateSizes(records.size(), fractions);
  CorpusSplit out;
  std::array<Corpus*, 3> parts = {&out.train, &out.dev, &out.test};
  std::size_t cursor = 0;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    parts[s]->reserve(sizes[s]);
    for (std::size_t k = 0; k < sizes[s]; ++k, ++cursor) {
      parts[s]->push_back(records[merged[cursor].index]);
    }
  }
  return out;
}

}  // namespace mpu
