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

#include "mpu/puloss.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "mpu/error.h"

namespace mpu {
namespace {

double SignValue(Sign y) { return static_cast<int>(y); }

// log(1 + exp(x)) without overflow.
double Softplus(double x) {
  return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x)));
}

void CheckPuBatch(const RiskBatch& batch) {
  if (batch.pos_scores.empty()) {
    throw BatchError("PU risk needs at least one positive sample");
  }
  if (batch.unl_scores.empty()) {
    throw BatchError("PU risk needs at least one unlabeled sample");
  }
}

void CheckPriors(const RiskBatch& batch, std::span<const double> priors) {
  if (priors.size() != batch.pos_scores.size()) {
    throw BatchError("expected " + std::to_string(batch.pos_scores.size()) +
                     " positive priors, got " + std::to_string(priors.size()));
  }
}

// Weighted positive risks and the unlabeled risk shared by the estimators.
struct PuTerms {
  double pos_plus = 0.0;   // (1/n_P) sum pi_i L(z_i, +1)
  double pos_minus = 0.0;  // (1/n_P) sum pi_i L(z_i, -1)
  double unl_minus = 0.0;  // (1/n_U) sum L(z_j, -1)
};

PuTerms ComputeTerms(const RiskBatch& batch, std::span<const double> priors,
                     const SurrogateLoss& loss) {
  PuTerms t;
  for (std::size_t i = 0; i < batch.pos_scores.size(); ++i) {
    const double z = batch.pos_scores[i];
    t.pos_plus += priors[i] * loss.Value(z, Sign::kPositive);
    t.pos_minus += priors[i] * loss.Value(z, Sign::kNegative);
  }
  for (double z : batch.unl_scores) t.unl_minus += loss.Value(z, Sign::kNegative);
  t.pos_plus /= static_cast<double>(batch.pos_scores.size());
  t.pos_minus /= static_cast<double>(batch.pos_scores.size());
  t.unl_minus /= static_cast<double>(batch.unl_scores.size());
  return t;
}

// The clamp is inactive whenever the estimated negative risk is >= 0, so
// nnPU and uPU agree exactly on that branch.
bool IsClamped(const PuTerms& t, PuVariant variant) {
  return variant == PuVariant::kNnpu && t.unl_minus - t.pos_minus < 0.0;
}

double Combine(const PuTerms& t, PuVariant variant) {
  if (IsClamped(t, variant)) return t.pos_plus;
  return t.pos_plus + (t.unl_minus - t.pos_minus);
}

}  // namespace

std::string_view ToString(SurrogateKind kind) {
  return kind == SurrogateKind::kSigmoid ? "sigmoid" : "logistic";
}

std::string_view ToString(PuVariant variant) {
  return variant == PuVariant::kUpu ? "upu" : "nnpu";
}

std::string_view ToString(PriorMode mode) {
  return mode == PriorMode::kConstant ? "constant" : "multiscale";
}

SurrogateKind ParseSurrogateKind(std::string_view name) {
  if (name == "sigmoid") return SurrogateKind::kSigmoid;
  if (name == "logistic") return SurrogateKind::kLogistic;
  throw ConfigError("unknown surrogate loss '" + std::string(name) +
                    "' (expected sigmoid|logistic)");
}

PuVariant ParsePuVariant(std::string_view name) {
  if (name == "upu") return PuVariant::kUpu;
  if (name == "nnpu") return PuVariant::kNnpu;
  throw ConfigError("unknown pu_variant '" + std::string(name) +
                    "' (expected upu|nnpu)");
}

PriorMode ParsePriorMode(std::string_view name) {
  if (name == "constant") return PriorMode::kConstant;
  if (name == "multiscale") return PriorMode::kMultiscale;
  throw ConfigError("unknown prior_mode '" + std::string(name) +
                    "' (expected constant|multiscale)");
}

double SurrogateLoss::Value(double z, Sign y) const {
  const double yz = SignValue(y) * z;
  if (kind_ == SurrogateKind::kSigmoid) return 1.0 / (1.0 + std::exp(yz));
  return Softplus(-yz);
}

double SurrogateLoss::Derivative(double z, Sign y) const {
  const double sy = SignValue(y);
  const double s = 1.0 / (1.0 + std::exp(sy * z));
  if (kind_ == SurrogateKind::kSigmoid) return -sy * s * (1.0 - s);
  return -sy * s;
}

double PnRisk(std::span<const double> scores, std::span<const Sign> labels,
              const SurrogateLoss& loss) {
  if (scores.empty()) throw BatchError("PN risk of an empty batch");
  if (scores.size() != labels.size()) {
    throw BatchError("PN risk: " + std::to_string(scores.size()) +
                     " scores but " + std::to_string(labels.size()) +
                     " labels");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    sum += loss.Value(scores[i], labels[i]);
  }
  return sum / static_cast<double>(scores.size());
}

double PuRiskWithPriors(const RiskBatch& batch,
                        std::span<const double> pos_priors, PuVariant variant,
                        const SurrogateLoss& loss) {
  CheckPuBatch(batch);
  CheckPriors(batch, pos_priors);
  return Combine(ComputeTerms(batch, pos_priors, loss), variant);
}

double UpuRisk(const RiskBatch& batch, double prior,
               const SurrogateLoss& loss) {
  CheckPuBatch(batch);
  const std::vector<double> priors(batch.pos_scores.size(), prior);
  return PuRiskWithPriors(batch, priors, PuVariant::kUpu, loss);
}

double NnpuRisk(const RiskBatch& batch, double prior,
                const SurrogateLoss& loss) {
  CheckPuBatch(batch);
  const std::vector<double> priors(batch.pos_scores.size(), prior);
  return PuRiskWithPriors(batch, priors, PuVariant::kNnpu, loss);
}

double MpuRisk(const RiskBatch& batch, const PriorTable& table,
               PuVariant variant, const SurrogateLoss& loss) {
  CheckPuBatch(batch);
  if (batch.pos_lengths.size() != batch.pos_scores.size()) {
    throw BatchError("multiscale PU risk: " +
                     std::to_string(batch.pos_scores.size()) +
                     " positive scores but " +
                     std::to_string(batch.pos_lengths.size()) + " lengths");
  }
  std::vector<double> priors(batch.pos_scores.size());
  for (std::size_t i = 0; i < priors.size(); ++i) {
    priors[i] = table.Lookup(batch.pos_lengths[i]);
  }
  return PuRiskWithPriors(batch, priors, variant, loss);
}

PuRiskGradient PuRiskWithPriorsGradient(const RiskBatch& batch,
                                        std::span<const double> pos_priors,
                                        PuVariant variant,
                                        const SurrogateLoss& loss) {
  CheckPuBatch(batch);
  CheckPriors(batch, pos_priors);
  const PuTerms terms = ComputeTerms(batch, pos_priors, loss);

  PuRiskGradient out;
  out.value = Combine(terms, variant);
  out.clamped = IsClamped(terms, variant);
  const double inv_p = 1.0 / static_cast<double>(batch.pos_scores.size());
  const double inv_u = 1.0 / static_cast<double>(batch.unl_scores.size());

  out.pos.resize(batch.pos_scores.size());
  for (std::size_t i = 0; i < out.pos.size(); ++i) {
    const double z = batch.pos_scores[i];
    double g = loss.Derivative(z, Sign::kPositive);
    if (!out.clamped) g -= loss.Derivative(z, Sign::kNegative);
    out.pos[i] = pos_priors[i] * g * inv_p;
  }
  out.unl.assign(batch.unl_scores.size(), 0.0);
  if (!out.clamped) {
    for (std::size_t j = 0; j < out.unl.size(); ++j) {
      out.unl[j] = loss.Derivative(batch.unl_scores[j], Sign::kNegative) *
                   inv_u;
    }
  }
  return out;
}

void LossConfig::Validate() const {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw ConfigError("gamma must be a finite value >= 0, got " +
                      std::to_string(gamma));
  }
  if (prior_mode == PriorMode::kConstant &&
      !(constant_prior > 0.0 && constant_prior < 1.0)) {
    throw ConfigError("constant_prior must be in (0,1), got " +
                      std::to_string(constant_prior));
  }
}

PriorSource::PriorSource(const LossConfig& config, const PriorTable* table)
    : mode_(config.prior_mode), constant_(config.constant_prior),
      table_(table) {
  if (mode_ == PriorMode::kMultiscale && table_ == nullptr) {
    throw ConfigError("multiscale prior mode requires a prior table");
  }
}

double PriorSource::For(int length) const {
  if (mode_ == PriorMode::kConstant) return constant_;
  return table_->Lookup(length);
}

namespace {

// Splits a labeled batch into the PU view. Index maps point back into the
// batch so gradients can be scattered.
struct PuSplit {
  std::vector<double> pos_scores;
  std::vector<int> pos_lengths;
  std::vector<double> pos_priors;
  std::vector<std::size_t> pos_index;
  std::vector<double> unl_scores;
  std::vector<std::size_t> unl_index;

  RiskBatch View() const { return {pos_scores, pos_lengths, unl_scores}; }
};

void CheckLabeled(const LabeledBatch& batch) {
  if (batch.scores.size() != batch.labels.size()) {
    throw BatchError("labeled batch: " + std::to_string(batch.scores.size()) +
                     " scores but " + std::to_string(batch.labels.size()) +
                     " labels");
  }
}

PuSplit SplitForPu(const LabeledBatch& batch, const PriorSource& priors,
                   bool need_lengths) {
  PuSplit split;
  for (std::size_t i = 0; i < batch.scores.size(); ++i) {
    if (batch.labels[i] == Sign::kPositive) {
      if (need_lengths && i >= batch.lengths.size()) {
        throw BatchError("labeled batch: missing length for sample " +
                         std::to_string(i));
      }
      const int length = i < batch.lengths.size() ? batch.lengths[i] : 0;
      split.pos_scores.push_back(batch.scores[i]);
      split.pos_lengths.push_back(length);
      split.pos_priors.push_back(priors.For(length));
      split.pos_index.push_back(i);
    } else {
      split.unl_scores.push_back(batch.scores[i]);
      split.unl_index.push_back(i);
    }
  }
  return split;
}

}  // namespace

double TotalLoss(const LabeledBatch& batch, const LossConfig& config,
                 const PriorTable* table) {
  return TotalLossGradient(batch, config, table).value;
}

LossGradient TotalLossGradient(const LabeledBatch& batch,
                               const LossConfig& config,
                               const PriorTable* table) {
  config.Validate();
  CheckLabeled(batch);
  const SurrogateLoss& loss = config.surrogate;

  LossGradient out;
  out.pn = PnRisk(batch.scores, batch.labels, loss);
  out.value = out.pn;
  out.grad.resize(batch.scores.size());
  const double inv_n = 1.0 / static_cast<double>(batch.scores.size());
  for (std::size_t i = 0; i < batch.scores.size(); ++i) {
    out.grad[i] = loss.Derivative(batch.scores[i], batch.labels[i]) * inv_n;
  }
  if (config.gamma == 0.0) return out;

  const PriorSource priors(config, table);
  const PuSplit split = SplitForPu(
      batch, priors, config.prior_mode == PriorMode::kMultiscale);
  const PuRiskGradient pu = PuRiskWithPriorsGradient(
      split.View(), split.pos_priors, config.variant, loss);
  out.pu = pu.value;
  out.clamped = pu.clamped;
  out.value += config.gamma * pu.value;
  for (std::size_t k = 0; k < pu.pos.size(); ++k) {
    out.grad[split.pos_index[k]] += config.gamma * pu.pos[k];
  }
  for (std::size_t k = 0; k < pu.unl.size(); ++k) {
    out.grad[split.unl_index[k]] += config.gamma * pu.unl[k];
  }
  return out;
}

}  // namespace mpu
