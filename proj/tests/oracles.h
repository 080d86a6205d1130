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

// Reference implementations used only by tests. They are written directly
// from the definitions, sharing no code with the library.

#ifndef MPU_TESTS_ORACLES_H_
#define MPU_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace mpu::testing {

// Expected final confidence of the clipped walk, by enumerating all 2^l
// token sequences. Confidence is tracked in integer units of 1/l.
inline double EnumeratedPrior(int l, double p) {
  double expected = 0.0;
  for (std::uint64_t path = 0; path < (std::uint64_t{1} << l); ++path) {
    int units = l;
    double prob = 1.0;
    for (int t = 0; t < l; ++t) {
      if ((path >> t) & 1U) {
        units = std::min(units + 1, l);
        prob *= p;
      } else {
        units = std::max(units - 1, 0);
        prob *= 1.0 - p;
      }
    }
    expected += prob * units / l;
  }
  return expected;
}

// Probability of ending at confidence 1, by the same enumeration.
inline double EnumeratedTopMass(int l, double p) {
  double mass = 0.0;
  for (std::uint64_t path = 0; path < (std::uint64_t{1} << l); ++path) {
    int units = l;
    double prob = 1.0;
    for (int t = 0; t < l; ++t) {
      const bool up = (path >> t) & 1U;
      units = up ? std::min(units + 1, l) : std::max(units - 1, 0);
      prob *= up ? p : 1.0 - p;
    }
    if (units == l) mass += prob;
  }
  return mass;
}

inline double Sigmoid(double z, int y) { return 1.0 / (1.0 + std::exp(y * z)); }
inline double Logistic(double z, int y) { return std::log1p(std::exp(-y * z)); }

inline double Mean(const std::vector<double>& v,
                   const std::function<double(double)>& f) {
  double s = 0.0;
  for (double x : v) s += f(x);
  return s / static_cast<double>(v.size());
}

// Weighted positive-side means with explicit priors.
inline double WeightedMean(const std::vector<double>& z,
                           const std::vector<double>& w,
                           const std::function<double(double)>& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) s += w[i] * f(z[i]);
  return s / static_cast<double>(z.size());
}

// Direct uPU / nnPU formulas over explicit priors and the sigmoid loss.
inline double ReferencePu(const std::vector<double>& pos,
                          const std::vector<double>& priors,
                          const std::vector<double>& unl, bool nonnegative,
                          const std::function<double(double, int)>& loss) {
  const double pos_plus =
      WeightedMean(pos, priors, [&](double z) { return loss(z, +1); });
  const double pos_minus =
      WeightedMean(pos, priors, [&](double z) { return loss(z, -1); });
  const double unl_minus = Mean(unl, [&](double z) { return loss(z, -1); });
  const double neg = unl_minus - pos_minus;
  return pos_plus + (nonnegative ? std::max(0.0, neg) : neg);
}

// Central difference of f at x along coordinate i.
inline double CentralDifference(const std::function<double(std::vector<double>)>& f,
                                std::vector<double> x, std::size_t i,
                                double h = 1e-5) {
  const double x0 = x[i];
  x[i] = x0 + h;
  const double fp = f(x);
  x[i] = x0 - h;
  const double fm = f(x);
  return (fp - fm) / (2.0 * h);
}

// Draws from a test-local engine, independent of the library's streams.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}
  double Uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int Int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  std::vector<double> Scores(int n, double scale = 4.0) {
    std::vector<double> v(n);
    for (double& x : v) x = Uniform(-scale, scale);
    return v;
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mpu::testing

#endif  // MPU_TESTS_ORACLES_H_
