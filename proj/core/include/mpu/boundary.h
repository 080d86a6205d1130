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

// Flat-array entry points for foreign-function bindings. Inputs are plain
// numeric spans and UTF-8 strings; results are plain vectors. Every call is
// stateless and reentrant.

#ifndef MPU_BOUNDARY_H_
#define MPU_BOUNDARY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mpu/error.h"
#include "mpu/prior.h"
#include "mpu/puloss.h"

namespace mpu {

// Rejected boundary input. index() names the offending element when the
// error is about one element.
class BoundaryError : public BatchError {
 public:
  BoundaryError(const std::string& message,
                std::optional<std::size_t> index = std::nullopt)
      : BatchError(message), index_(index) {}
  std::optional<std::size_t> index() const { return index_; }

 private:
  std::optional<std::size_t> index_;
};

struct FlatLossResult {
  double value = 0.0;
  std::vector<double> pos_grad;
  std::vector<double> unl_grad;
  std::vector<double> pn_grad;
};

// PN risk over (pn_scores, pn_labels) plus gamma times the length-variant PU
// risk over (pos_scores, pos_lengths, unl_scores). Labels are +1 (human) or
// -1 (machine). With gamma == 0 the PU arrays may be empty.
FlatLossResult FlatMpuLoss(std::span<const double> pos_scores,
                           std::span<const std::int64_t> pos_lengths,
                           std::span<const double> unl_scores,
                           const PriorTable& table, PuVariant variant,
                           double gamma, std::span<const double> pn_scores,
                           std::span<const std::int64_t> pn_labels,
                           SurrogateKind surrogate = SurrogateKind::kSigmoid);

// One multiscaling draw, identical to Multiscaler::Apply(text, 0, 0) with
// the same p_sent and seed.
std::string FlatMultiscale(std::string_view text, double p_sent,
                           std::uint64_t seed);

}  // namespace mpu

#endif  // MPU_BOUNDARY_H_
