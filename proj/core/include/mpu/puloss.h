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

// Risk estimators over detector scores.
//
// Sign convention: a score z = g(x) > 0 means "human" (the positive class).
// Human samples are positives; machine samples form the unlabeled set.
//
//   uPU  = pi R_P(+1) - pi R_P(-1) + R_U(-1)
//   nnPU = pi R_P(+1) + max(0, R_U(-1) - pi R_P(-1))
//   MPU  = the same forms with pi replaced per positive sample by the
//          length-variant prior of that sample, averaged over positives.
//   total = PN + gamma * MPU

#ifndef MPU_PULOSS_H_
#define MPU_PULOSS_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mpu/prior.h"

namespace mpu {

enum class SurrogateKind { kSigmoid, kLogistic };
enum class PuVariant { kUpu, kNnpu };
enum class PriorMode { kConstant, kMultiscale };

// Binary label for the loss: +1 for human, -1 for machine.
enum class Sign : int { kPositive = 1, kNegative = -1 };

std::string_view ToString(SurrogateKind kind);
std::string_view ToString(PuVariant variant);
std::string_view ToString(PriorMode mode);
// Parsers throw ConfigError on unknown names.
SurrogateKind ParseSurrogateKind(std::string_view name);
PuVariant ParsePuVariant(std::string_view name);
PriorMode ParsePriorMode(std::string_view name);

class SurrogateLoss {
 public:
  explicit SurrogateLoss(SurrogateKind kind = SurrogateKind::kSigmoid)
      : kind_(kind) {}

  SurrogateKind kind() const { return kind_; }

  // sigmoid:  1 / (1 + exp(y z))
  // logistic: log(1 + exp(-y z))
  double Value(double z, Sign y) const;
  // d Value / d z.
  double Derivative(double z, Sign y) const;

 private:
  SurrogateKind kind_;
};

// Scores of one PU optimization step. Views only; the caller owns storage.
struct RiskBatch {
  std::span<const double> pos_scores;
  // Token lengths aligned with pos_scores. Required by the multiscale risk.
  std::span<const int> pos_lengths;
  std::span<const double> unl_scores;
};

// Empirical mean of L(z_i, y_i). Throws BatchError on empty or misaligned
// input.
double PnRisk(std::span<const double> scores, std::span<const Sign> labels,
              const SurrogateLoss& loss);

// Constant-prior estimators. Throw BatchError if either set is empty.
double UpuRisk(const RiskBatch& batch, double prior, const SurrogateLoss& loss);
double NnpuRisk(const RiskBatch& batch, double prior,
                const SurrogateLoss& loss);

// Length-variant estimator: each positive is weighted by table.Lookup of
// its length.
double MpuRisk(const RiskBatch& batch, const PriorTable& table,
               PuVariant variant, const SurrogateLoss& loss);

// Estimator for explicit per-positive priors. The three functions above are
// thin wrappers around this.
double PuRiskWithPriors(const RiskBatch& batch,
                        std::span<const double> pos_priors, PuVariant variant,
                        const SurrogateLoss& loss);

// Per-score gradients of PuRiskWithPriors. The nnPU clamp uses the plain
// subgradient: when the negative-risk part is clamped at zero it contributes
// nothing, and unlabeled scores get zero gradient.
struct PuRiskGradient {
  double value = 0.0;
  bool clamped = false;
  std::vector<double> pos;
  std::vector<double> unl;
};
PuRiskGradient PuRiskWithPriorsGradient(const RiskBatch& batch,
                                        std::span<const double> pos_priors,
                                        PuVariant variant,
                                        const SurrogateLoss& loss);

struct LossConfig {
  double gamma = 0.4;
  PuVariant variant = PuVariant::kNnpu;
  PriorMode prior_mode = PriorMode::kMultiscale;
  // Used when prior_mode == kConstant.
  double constant_prior = 0.2;
  SurrogateLoss surrogate{SurrogateKind::kSigmoid};

  void Validate() const;
};

// One fully labeled batch. Human samples feed the PN term as +1 and the PU
// term as positives; machine samples feed the PN term as -1 and the PU term
// as unlabeled.
struct LabeledBatch {
  std::span<const double> scores;
  std::span<const Sign> labels;
  // Token lengths; only read for human samples in multiscale mode.
  std::span<const int> lengths;
};

// Resolves the prior source for a LossConfig: the multiscale table, or a
// constant. `table` may be null when prior_mode is kConstant.
class PriorSource {
 public:
  PriorSource(const LossConfig& config, const PriorTable* table);
  double For(int length) const;

 private:
  PriorMode mode_;
  double constant_;
  const PriorTable* table_;
};

// PN + gamma * PU risk. With gamma == 0 the PU term is not evaluated, so a
// single-class batch is accepted.
double TotalLoss(const LabeledBatch& batch, const LossConfig& config,
                 const PriorTable* table);

struct LossGradient {
  double value = 0.0;
  double pn = 0.0;
  // PU risk value, or nullopt if it was skipped (gamma == 0).
  std::optional<double> pu;
  bool clamped = false;
  std::vector<double> grad;  // d total / d scores[i]
};

// Value and exact per-score gradient of TotalLoss.
LossGradient TotalLossGradient(const LabeledBatch& batch,
                               const LossConfig& config,
                               const PriorTable* table);

}  // namespace mpu

#endif  // MPU_PULOSS_H_
