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

// Length-variant positive priors.
//
// A text of l tokens is scored by an idealized recurrent discriminator whose
// confidence starts at 1 and moves by +1/l (a "clear positive" token, with
// probability p) or -1/l (any other token), clipped to [0, 1]. The
// confidence therefore lives on the l+1 states {0/l, ..., l/l} and evolves
// as a Markov chain with a band transition matrix. The prior for length l is
// the expected final confidence after l tokens.

#ifndef MPU_PRIOR_H_
#define MPU_PRIOR_H_

#include <span>
#include <vector>

namespace mpu {

struct PriorConfig {
  // Probability that a single token is a clear positive. Must be in (0, 1).
  double p = 0.2;
  // Largest tabulated length; longer texts saturate at the last entry.
  int l_max = 512;

  // Throws ConfigError on violation.
  void Validate() const;
};

// Band transition matrix of the clipped confidence walk for length l.
// Only the two nonzeros per row are stored implicitly, so applying the
// matrix to a state vector costs O(l).
class TransitionMatrix {
 public:
  // Throws ConfigError if length < 1 or p is outside (0, 1).
  TransitionMatrix(int length, double p);

  int length() const { return length_; }
  int size() const { return length_ + 1; }
  double p() const { return p_; }

  // Dense entry lookup; O(1).
  double At(int row, int col) const;

  // out = state * P. Both spans must have size() entries.
  void Apply(std::span<const double> state, std::span<double> out) const;

  std::vector<std::vector<double>> Dense() const;

 private:
  int length_;
  double p_;
};

// Distribution over confidence states after l tokens, starting from the
// one-hot top state. Entry i is the probability of confidence i/l.
std::vector<double> FinalStateDistribution(int length, double p);

// Expected final confidence of the clipped walk for a length-l text.
double PriorExact(int length, double p);

// Same quantity by enumerating all 2^l token assignments. Oracle only;
// rejects length > 20 with ConfigError.
double PriorBruteForce(int length, double p);

// Probability that the walk ends at confidence 1 after l tokens.
double TopStateMass(int length, double p);

// Immutable table of priors for lengths 1..l_max.
class PriorTable {
 public:
  // values[l - 1] is the prior for length l. Entries must lie in [0, 1].
  PriorTable(double p, std::vector<double> values);

  static PriorTable Build(const PriorConfig& config);
  // Every length maps to `prior`. Useful for ordinary (length-blind) PU.
  static PriorTable Constant(double prior, int l_max);

  // Prior for a text of `length` tokens. Lengths above l_max clamp to the
  // last entry; length < 1 throws BatchError.
  double Lookup(int length) const;

  double p() const { return p_; }
  int l_max() const { return static_cast<int>(values_.size()); }
  std::span<const double> values() const { return values_; }

 private:
  double p_;
  std::vector<double> values_;
};

}  // namespace mpu

#endif  // MPU_PRIOR_H_
