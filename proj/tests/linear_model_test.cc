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

#include "mpu/linear_model.h"

#include <gtest/gtest.h>

#include <filesystem>

#include "mpu/error.h"
#include "mpu/io.h"
#include "oracles.h"

namespace mpu {
namespace {

FeatureConfig SmallFeatures() {
  FeatureConfig c;
  c.dim = 1 << 8;
  return c;
}

TEST(LinearModelTest, ScoreIsBiasPlusDot) {
  LinearModel m(SmallFeatures());
  testing::Gen gen(1);
  for (double& w : m.weights()) w = gen.Uniform(-1, 1);
  m.bias() = 0.25;
  const SparseVector x = FeaturizeText("some short text here.", m.features());
  double want = m.bias();
  for (std::size_t k = 0; k < x.size(); ++k) want += m.weights()[x.index[k]] * x.value[k];
  EXPECT_DOUBLE_EQ(m.Score(x), want);
  EXPECT_DOUBLE_EQ(m.ScoreText("some short text here."), want);
}

TEST(LinearModelTest, ZeroModelScoresZero) {
  const LinearModel m(SmallFeatures());
  EXPECT_EQ(m.weights().size(), 256u);
  EXPECT_EQ(m.ScoreText("anything at all"), 0.0);
}

TEST(LinearModelTest, SerializationRoundTripsBitExactly) {
  LinearModel m(SmallFeatures());
  testing::Gen gen(2);
  for (std::size_t j = 0; j < m.weights().size(); j += 3) {
    m.weights()[j] = gen.Uniform(-1, 1) * 1e-7;
  }
  m.bias() = -0.1 / 3.0;
  const std::string text = SerializeModel(m, ModelFile{"abc"});
  const LoadedModel back = DeserializeModel(text);
  EXPECT_EQ(back.model, m);
  EXPECT_EQ(back.meta.train_config_hash, "abc");
  EXPECT_EQ(SerializeModel(back.model, back.meta), text);
}

TEST(LinearModelTest, SaveAndLoadFile) {
  const auto path = std::filesystem::temp_directory_path() / "mpu_model_test.json";
  LinearModel m(SmallFeatures());
  m.weights()[7] = 1.5;
  SaveModel(m, ModelFile{"h"}, path);
  EXPECT_EQ(LoadModel(path).model, m);
  std::filesystem::remove(path);
  EXPECT_THROW(LoadModel(path), DataError);
}

TEST(LinearModelTest, RejectsBadFiles) {
  EXPECT_THROW(DeserializeModel("not json"), DataError);
  EXPECT_THROW(DeserializeModel("{}"), DataError);
  LinearModel m(SmallFeatures());
  std::string text = SerializeModel(m, ModelFile{});
  const auto pos = text.find("\"version\":1");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 11, "\"version\":9");
  EXPECT_THROW(DeserializeModel(text), DataError);
}

TEST(IoTest, AtomicWriteAndRead) {
  const auto path = std::filesystem::temp_directory_path() / "mpu_io_test.txt";
  WriteFileAtomic(path, "first");
  WriteFileAtomic(path, "second");
  EXPECT_EQ(ReadFile(path), "second");
  std::filesystem::remove(path);
  EXPECT_THROW(ReadFile(path), DataError);
  EXPECT_EQ(HashHex("x").size(), 16u);
  EXPECT_NE(HashHex("x"), HashHex("y"));
}

}  // namespace
}  // namespace mpu
