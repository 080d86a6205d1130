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

#ifndef MPU_RANDOM_H_
#define MPU_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace mpu {

// SplitMix64 finalizer; used to derive independent stream seeds from keys.
std::uint64_t MixBits(std::uint64_t x);

// Deterministic random stream. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the derived draws below avoid the
// implementation-defined std distributions so results match across
// standard libraries.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(MixBits(seed)) {}

  // Stream for a (seed, a, b) key, e.g. (run seed, epoch, sample index).
  static RandomStream ForKey(std::uint64_t seed, std::uint64_t a,
                             std::uint64_t b);

  std::uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 bits of resolution.
  double NextUniform();
  bool Bernoulli(double p_true) { return NextUniform() < p_true; }
  // Uniform on [0, n); n must be > 0. Unbiased (rejection sampling).
  std::uint64_t UniformIndex(std::uint64_t n);

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(UniformIndex(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mpu

#endif  // MPU_RANDOM_H_
