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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "mpu/multiscale.h"
#include "oracles.h"

namespace mpu {
namespace {

using Ints = std::vector<std::int64_t>;
using Doubles = std::vector<double>;

TEST(FlatMpuLossTest, GammaZeroIsPn) {
  const PriorTable table = PriorTable::Build({0.2, 8});
  const Doubles pn = {0.5, -1.0};
  const Ints labels = {1, -1};
  const FlatLossResult r =
      FlatMpuLoss({}, {}, {}, table, PuVariant::kNnpu, 0.0, pn, labels);
  const std::vector<Sign> signs = {Sign::kPositive, Sign::kNegative};
  EXPECT_EQ(r.value, PnRisk(pn, signs, SurrogateLoss()));
  EXPECT_TRUE(r.pos_grad.empty());
}

TEST(FlatMpuLossTest, CompositionExample) {
  const PriorTable table = PriorTable::Build({0.2, 8});
  const Doubles zero = {0.0};
  const Ints len = {1};
  const Doubles pn = {0.0, 0.0};
  const Ints labels = {1, -1};
  const FlatLossResult r =
      FlatMpuLoss(zero, len, zero, table, PuVariant::kUpu, 0.4, pn, labels);
  EXPECT_NEAR(r.value, 0.7, 1e-15);
}

TEST(FlatMpuLossTest, BitIdenticalToPrimaryPath) {
  const PriorTable table = PriorTable::Build({0.2, 64});
  testing::Gen gen(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.Int(2, 12);
    Doubles z = gen.Scores(n);
    std::vector<Sign> y(n);
    std::vector<int> len(n);
    Doubles pos, unl;
    Ints pos_len, labels;
    for (int i = 0; i < n; ++i) {
      y[i] = (i == 0 || (i > 1 && gen.Int(0, 1))) ? Sign::kPositive : Sign::kNegative;
      len[i] = gen.Int(1, 90);
      labels.push_back(static_cast<int>(y[i]));
      if (y[i] == Sign::kPositive) {
        pos.push_back(z[i]);
        pos_len.push_back(len[i]);
      } else {
        unl.push_back(z[i]);
      }
    }
    LossConfig c;
    c.gamma = gen.Uniform(0.0, 1.0);
    c.variant = trial % 2 ? PuVariant::kNnpu : PuVariant::kUpu;
    const LossGradient want = TotalLossGradient({z, y, len}, c, &table);
    const FlatLossResult got =
        FlatMpuLoss(pos, pos_len, unl, table, c.variant, c.gamma, z, labels);
    EXPECT_EQ(got.value, want.value);
    std::size_t p = 0, u = 0;
    for (int i = 0; i < n; ++i) {
      const double g = got.pn_grad[i] +
                       (y[i] == Sign::kPositive ? got.pos_grad[p++] : got.unl_grad[u++]);
      EXPECT_EQ(g, want.grad[i]);
    }
  }
}

TEST(FlatMpuLossTest, GradientsMatchFiniteDifferences) {
  const PriorTable table = PriorTable::Build({0.2, 64});
  testing::Gen gen(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Doubles pos = gen.Scores(gen.Int(1, 6));
    const Doubles unl = gen.Scores(gen.Int(1, 6));
    Ints len;
    for (std::size_t i = 0; i < pos.size(); ++i) len.push_back(gen.Int(1, 80));
    const Doubles pn = gen.Scores(4);
    const Ints labels = {1, -1, 1, -1};
    const FlatLossResult r =
        FlatMpuLoss(pos, len, unl, table, PuVariant::kUpu, 0.4, pn, labels);
    auto f = [&](Doubles x) {
      return FlatMpuLoss(x, len, unl, table, PuVariant::kUpu, 0.4, pn, labels).value;
    };
    for (std::size_t i = 0; i < pos.size(); ++i) {
      EXPECT_LT(std::abs(r.pos_grad[i] - testing::CentralDifference(f, pos, i)) /
                    std::max(1.0, std::abs(r.pos_grad[i])),
                1e-5);
    }
  }
}

TEST(FlatMpuLossTest, ErrorsCarryIndices) {
  const PriorTable table = PriorTable::Build({0.2, 8});
  const Doubles ok = {0.0, 0.0};
  const Ints len = {1, 2};
  const Ints labels = {1, -1};
  const Doubles nan = {0.0, std::numeric_limits<double>::quiet_NaN()};
  try {
    FlatMpuLoss(nan, len, ok, table, PuVariant::kUpu, 0.4, ok, labels);
    FAIL();
  } catch (const BoundaryError& e) {
    EXPECT_EQ(e.index(), 1u);
    EXPECT_NE(std::string(e.what()).find("pos_scores[1]"), std::string::npos);
  }
  const Ints bad_len = {1, 0};
  try {
    FlatMpuLoss(ok, bad_len, ok, table, PuVariant::kUpu, 0.4, ok, labels);
    FAIL();
  } catch (const BoundaryError& e) {
    EXPECT_EQ(e.index(), 1u);
  }
  const Ints bad_labels = {1, 0};
  EXPECT_THROW(FlatMpuLoss(ok, len, ok, table, PuVariant::kUpu, 0.4, ok, bad_labels),
               BoundaryError);
  const Ints short_len = {1};
  EXPECT_THROW(FlatMpuLoss(ok, short_len, ok, table, PuVariant::kUpu, 0.4, ok, labels),
               BoundaryError);
  EXPECT_THROW(FlatMpuLoss({}, {}, ok, table, PuVariant::kUpu, 0.4, ok, labels),
               BoundaryError);
  EXPECT_THROW(FlatMpuLoss(ok, len, ok, table, PuVariant::kUpu, 0.4, {}, {}),
               BoundaryError);
}

TEST(FlatMultiscaleTest, MatchesPrimary) {
  const std::string text = "A b. C d. E f. G h. I j.";
  EXPECT_EQ(FlatMultiscale("  A   b. C d. ", 0.0, 3), "A b. C d.");
  int kept = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const std::string out = FlatMultiscale(text, 0.25, seed);
    EXPECT_EQ(out, Multiscaler(MultiscaleConfig{0.25, seed}).Apply(text, 0, 0));
    kept += static_cast<int>(SplitSentences(out).size());
    total += 5;
  }
  const double expected = 0.75 + std::pow(0.25, 5) / 5;
  const double rate = static_cast<double>(kept) / total;
  EXPECT_LT(std::abs(rate - expected), 3 * std::sqrt(0.75 * 0.25 / total));
  EXPECT_THROW(FlatMultiscale("", 0.25, 0), BoundaryError);
  EXPECT_THROW(FlatMultiscale("x", 1.0, 0), BoundaryError);
}

}  // namespace
}  // namespace mpu
