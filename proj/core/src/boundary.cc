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

#include "mpu/boundary.h"

#include <cmath>
#include <limits>

#include "mpu/multiscale.h"
#include "mpu/text.h"

namespace mpu {
namespace {

void CheckFinite(std::span<const double> values, const char* name) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw BoundaryError(std::string(name) + "[" + std::to_string(i) +
                              "] is not finite",
                          i);
    }
  }
}

void CheckSize(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw BoundaryError(std::string(what) + ": sizes " + std::to_string(a) +
                        " and " + std::to_string(b) + " differ");
  }
}

}  // namespace

FlatLossResult FlatMpuLoss(std::span<const double> pos_scores,
                           std::span<const std::int64_t> pos_lengths,
                           std::span<const double> unl_scores,
                           const PriorTable& table, PuVariant variant,
                           double gamma, std::span<const double> pn_scores,
                           std::span<const std::int64_t> pn_labels,
                           SurrogateKind surrogate) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw BoundaryError("gamma must be finite and >= 0");
  }
  CheckSize(pn_scores.size(), pn_labels.size(), "pn_scores/pn_labels");
  CheckSize(pos_scores.size(), pos_lengths.size(), "pos_scores/pos_lengths");
  if (pn_scores.empty()) throw BoundaryError("pn_scores is empty");
  CheckFinite(pn_scores, "pn_scores");
  CheckFinite(pos_scores, "pos_scores");
  CheckFinite(unl_scores, "unl_scores");

  std::vector<Sign> labels(pn_labels.size());
  for (std::size_t i = 0; i < pn_labels.size(); ++i) {
    if (pn_labels[i] != 1 && pn_labels[i] != -1) {
      throw BoundaryError("pn_labels[" + std::to_string(i) +
                              "] must be +1 or -1",
                          i);
    }
    labels[i] = pn_labels[i] == 1 ? Sign::kPositive : Sign::kNegative;
  }

  const SurrogateLoss loss(surrogate);
  FlatLossResult out;
  out.value = PnRisk(pn_scores, labels, loss);
  out.pn_grad.resize(pn_scores.size());
  const double inv_n = 1.0 / static_cast<double>(pn_scores.size());
  for (std::size_t i = 0; i < pn_scores.size(); ++i) {
    out.pn_grad[i] = loss.Derivative(pn_scores[i], labels[i]) * inv_n;
  }
  out.pos_grad.assign(pos_scores.size(), 0.0);
  out.unl_grad.assign(unl_scores.size(), 0.0);
  if (gamma == 0.0) return out;

  if (pos_scores.empty()) throw BoundaryError("pos_scores is empty");
  if (unl_scores.empty()) throw BoundaryError("unl_scores is empty");
  std::vector<int> lengths(pos_lengths.size());
  std::vector<double> priors(pos_lengths.size());
  for (std::size_t i = 0; i < pos_lengths.size(); ++i) {
    if (pos_lengths[i] < 1 ||
        pos_lengths[i] > std::numeric_limits<int>::max()) {
      throw BoundaryError("pos_lengths[" + std::to_string(i) +
                              "] is out of range",
                          i);
    }
    lengths[i] = static_cast<int>(pos_lengths[i]);
    priors[i] = table.Lookup(lengths[i]);
  }
  const PuRiskGradient pu = PuRiskWithPriorsGradient(
      {pos_scores, lengths, unl_scores}, priors, variant, loss);
  out.value += gamma * pu.value;
  for (std::size_t k = 0; k < pu.pos.size(); ++k) {
    out.pos_grad[k] = gamma * pu.pos[k];
  }
  for (std::size_t k = 0; k < pu.unl.size(); ++k) {
    out.unl_grad[k] = gamma * pu.unl[k];
  }
  return out;
}

std::string FlatMultiscale(std::string_view text, double p_sent,
                           std::uint64_t seed) {
  if (IsBlank(text)) throw BoundaryError("text is empty");
  MultiscaleConfig config{p_sent, seed};
  try {
    config.Validate();
  } catch (const ConfigError& e) {
    throw BoundaryError(e.what());
  }
  return Multiscaler(config).Apply(text, 0, 0);
}

}  // namespace mpu
