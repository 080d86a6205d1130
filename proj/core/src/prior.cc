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

#include "mpu/prior.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "mpu/error.h"

namespace mpu {
namespace {

constexpr int kMaxBruteForceLength = 20;

void CheckLengthAndP(int length, double p) {
  if (length < 1) {
    throw ConfigError("prior: length must be >= 1, got " +
                      std::to_string(length));
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw ConfigError("prior: token-positive probability must be in (0,1), "
                      "got " + std::to_string(p));
  }
}

}  // namespace

void PriorConfig::Validate() const {
  if (!(p > 0.0 && p < 1.0)) {
    throw ConfigError("token_positive_p must be in (0,1), got " +
                      std::to_string(p));
  }
  if (l_max < 1) {
    throw ConfigError("l_max must be >= 1, got " + std::to_string(l_max));
  }
}

TransitionMatrix::TransitionMatrix(int length, double p)
    : length_(length), p_(p) {
  CheckLengthAndP(length, p);
}

double TransitionMatrix::At(int row, int col) const {
  const int n = length_;
  if (row < 0 || row > n || col < 0 || col > n) return 0.0;
  // A negative token moves down one state (floor at 0), a positive token
  // moves up one state (ceiling at l).
  const int down = std::max(row - 1, 0);
  const int up = std::min(row + 1, n);
  double v = 0.0;
  if (col == down) v += 1.0 - p_;
  if (col == up) v += p_;
  return v;
}

void TransitionMatrix::Apply(std::span<const double> state,
                             std::span<double> out) const {
  const int n = length_;
  std::fill(out.begin(), out.end(), 0.0);
  const double q = 1.0 - p_;
  // Row 0 keeps its negative mass at state 0; row l keeps its positive mass
  // at state l.
  out[0] += q * state[0];
  for (int i = 1; i <= n; ++i) out[i - 1] += q * state[i];
  for (int i = 0; i < n; ++i) out[i + 1] += p_ * state[i];
  out[n] += p_ * state[n];
}

std::vector<std::vector<double>> TransitionMatrix::Dense() const {
  std::vector<std::vector<double>> rows(size(), std::vector<double>(size()));
  for (int r = 0; r < size(); ++r) {
    for (int c = 0; c < size(); ++c) rows[r][c] = At(r, c);
  }
  return rows;
}

std::vector<double> FinalStateDistribution(int length, double p) {
  const TransitionMatrix matrix(length, p);
  std::vector<double> state(matrix.size(), 0.0);
  std::vector<double> next(matrix.size(), 0.0);
  state.back() = 1.0;
  for (int step = 0; step < length; ++step) {
    matrix.Apply(state, next);
    std::swap(state, next);
  }
  return state;
}

double PriorExact(int length, double p) {
  const std::vector<double> state = FinalStateDistribution(length, p);
  double expectation = 0.0;
  for (int i = 0; i <= length; ++i) {
    expectation += state[i] * (static_cast<double>(i) / length);
  }
  return std::clamp(expectation, 0.0, 1.0);
}

double PriorBruteForce(int length, double p) {
  CheckLengthAndP(length, p);
  if (length > kMaxBruteForceLength) {
    throw ConfigError("prior_bruteforce: length " + std::to_string(length) +
                      " exceeds enumeration limit " +
                      std::to_string(kMaxBruteForceLength));
  }
  // Confidence is tracked in units of 1/l so the clip is exact.
  const std::uint32_t paths = 1u << length;
  double expectation = 0.0;
  for (std::uint32_t path = 0; path < paths; ++path) {
    int confidence = length;
    double weight = 1.0;
    for (int t = 0; t < length; ++t) {
      if ((path >> t) & 1u) {
        confidence = std::min(confidence + 1, length);
        weight *= p;
      } else {
        confidence = std::max(confidence - 1, 0);
        weight *= 1.0 - p;
      }
    }
    expectation += weight * (static_cast<double>(confidence) / length);
  }
  return expectation;
}

double TopStateMass(int length, double p) {
  return FinalStateDistribution(length, p).back();
}

PriorTable::PriorTable(double p, std::vector<double> values)
    : p_(p), values_(std::move(values)) {
  if (values_.empty()) throw ConfigError("prior table must be nonempty");
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ConfigError("prior table entries must lie in [0,1], got " +
                        std::to_string(v));
    }
  }
}

PriorTable PriorTable::Build(const PriorConfig& config) {
  config.Validate();
  std::vector<double> values(config.l_max);
  for (int l = 1; l <= config.l_max; ++l) {
    values[l - 1] = PriorExact(l, config.p);
  }
  return PriorTable(config.p, std::move(values));
}

PriorTable PriorTable::Constant(double prior, int l_max) {
  if (!(prior > 0.0 && prior < 1.0)) {
    throw ConfigError("constant prior must be in (0,1), got " +
                      std::to_string(prior));
  }
  if (l_max < 1) throw ConfigError("l_max must be >= 1");
  return PriorTable(prior, std::vector<double>(l_max, prior));
}

double PriorTable::Lookup(int length) const {
  if (length < 1) {
    throw BatchError("prior lookup: text length must be >= 1, got " +
                     std::to_string(length));
  }
  const auto index = static_cast<std::size_t>(
      std::min(length, static_cast<int>(values_.size())) - 1);
  return values_[index];
}

}  // namespace mpu
