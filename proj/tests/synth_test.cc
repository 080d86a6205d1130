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

#include "mpu/synth.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "mpu/error.h"
#include "mpu/features.h"
#include "mpu/random.h"

namespace mpu {
namespace {

SynthConfig Small() {
  SynthConfig c;
  c.vocab_size = 300;
  c.signal_tokens = 10;
  c.train_per_class = 50;
  c.test_short_per_class = 20;
  c.test_long_per_class = 20;
  return c;
}

int WordCount(const std::string& text) {
  int n = 0;
  for (const std::string& t : Tokenize(text)) n += t != ".";
  return n;
}

TEST(SynthTest, VocabularyIsDistinct) {
  const SynthGenerator g(Small());
  const auto& v = g.vocabulary();
  EXPECT_EQ(std::set<std::string>(v.begin(), v.end()).size(), v.size());
  EXPECT_TRUE(g.IsSignalWord(v[0]));
  EXPECT_FALSE(g.IsSignalWord(v[10]));
}

TEST(SynthTest, TextHasRequestedLengthAndEndsWithPeriod) {
  const SynthGenerator g(Small());
  RandomStream rng(1);
  for (int words : {1, 4, 17, 100}) {
    for (Origin o : {Origin::kHuman, Origin::kAi}) {
      const std::string t = g.GenerateText(o, words, rng);
      EXPECT_EQ(WordCount(t), words);
      EXPECT_EQ(t.back(), '.');
    }
  }
}

TEST(SynthTest, AiTextsNeverContainSignal) {
  const SynthGenerator g(Small());
  RandomStream rng(2);
  for (int i = 0; i < 500; ++i) {
    EXPECT_FALSE(ContainsSignal(g, g.GenerateText(Origin::kAi, 30, rng)));
  }
}

TEST(SynthTest, FullSignalIsSeparable) {
  SynthConfig c = Small();
  c.signal_prob = 1.0;
  c.signal_tokens = 1;
  const SynthGenerator g(c);
  RandomStream rng(3);
  const std::string t = g.GenerateText(Origin::kHuman, 12, rng);
  for (const std::string& tok : Tokenize(t)) {
    if (tok != ".") {
      EXPECT_EQ(tok, g.vocabulary()[0]);
    }
  }
}

TEST(SynthTest, ZeroSignalMatchesAiDistribution) {
  SynthConfig c = Small();
  c.signal_prob = 0.0;
  const SynthGenerator g(c);
  RandomStream rng(4);
  std::map<std::string, int> human, ai;
  const int n = 4000;
  for (int i = 0; i < n; ++i) {
    for (const std::string& t : Tokenize(g.GenerateText(Origin::kHuman, 5, rng))) ++human[t];
    for (const std::string& t : Tokenize(g.GenerateText(Origin::kAi, 5, rng))) ++ai[t];
  }
  for (const auto& [tok, count] : human) {
    EXPECT_FALSE(g.IsSignalWord(tok)) << tok;
  }
  // Per-word frequencies agree to within binomial noise.
  const double expected = 5.0 * n / (c.vocab_size - c.signal_tokens);
  for (const auto& [tok, count] : ai) {
    if (tok == ".") continue;
    EXPECT_LT(std::abs(count - human[tok]), 6 * std::sqrt(2 * expected)) << tok;
  }
}

TEST(SynthTest, SignalFreeFrequency) {
  const SynthGenerator g(SynthConfig{});
  RandomStream rng(5);
  const int n = 100000;
  int clean = 0;
  for (int i = 0; i < n; ++i) {
    clean += !ContainsSignal(g, g.GenerateText(Origin::kHuman, 10, rng));
  }
  const double p = std::pow(0.8, 10);
  EXPECT_NEAR(p, 0.107, 5e-4);
  EXPECT_LT(std::abs(clean / static_cast<double>(n) - p), 3 * std::sqrt(p * (1 - p) / n));
}

TEST(SynthTest, BenchmarkShapeAndDeterminism) {
  const SynthConfig c = Small();
  const SynthBenchmark a = SynthGenerator(c).GenerateBenchmark();
  const SynthBenchmark b = SynthGenerator(c).GenerateBenchmark();
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.test_long, b.test_long);
  EXPECT_EQ(a.train.size(), 100u);
  EXPECT_EQ(a.test_short.size(), 40u);
  for (const Record& r : a.test_short) {
    const int w = WordCount(r.text);
    EXPECT_GE(w, c.short_min);
    EXPECT_LE(w, c.short_max);
  }
  for (const Record& r : a.test_long) {
    const int w = WordCount(r.text);
    EXPECT_GE(w, c.long_min);
    EXPECT_LE(w, c.long_max);
  }
  int humans = 0;
  for (const Record& r : a.train) humans += r.label == Origin::kHuman;
  EXPECT_EQ(humans, 50);
  SynthConfig other = c;
  other.seed = 99;
  EXPECT_NE(SynthGenerator(other).GenerateBenchmark().train, a.train);
}

TEST(SynthTest, Validation) {
  SynthConfig c = Small();
  c.signal_tokens = c.vocab_size;
  EXPECT_THROW(SynthGenerator{c}, ConfigError);
  c = Small();
  c.short_max = 0;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = Small();
  c.signal_prob = 1.5;
  EXPECT_THROW(c.Validate(), ConfigError);
}

}  // namespace
}  // namespace mpu
