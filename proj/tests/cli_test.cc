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

#include "cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mpu/error.h"
#include "mpu/io.h"
#include "run_config.h"

namespace mpu::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mpu_cli_test_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  int Run(std::vector<std::string> args) {
    args.insert(args.begin(), "mpu");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return cli::Run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  void WriteSmallSynth() {
    WriteFileAtomic(Path("synth.json"),
                    R"({"schema_version":1,"vocab_size":300,"signal_tokens":10,)"
                    R"("train_per_class":100,"test_short_per_class":30,)"
                    R"("test_long_per_class":30,"seed":3})");
    ASSERT_EQ(Run({"synth", "--config", Path("synth.json"), "--out-train",
                   Path("train.jsonl"), "--out-test-short", Path("short.jsonl"),
                   "--out-test-long", Path("long.jsonl")}),
              kOk)
        << err_.str();
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, PriorCsv) {
  ASSERT_EQ(Run({"prior", "--p", "0.2", "--lmax", "8", "--out", Path("t.csv")}), kOk);
  std::istringstream csv(ReadFile(Path("t.csv")));
  std::string header, first;
  std::getline(csv, header);
  std::getline(csv, first);
  EXPECT_EQ(header, "l,prior,top_state_mass");
  EXPECT_EQ(first, "1,0.20000000000000001,0.20000000000000001");
  const json manifest = json::parse(ReadFile(Path("t.csv.manifest.json")));
  EXPECT_EQ(manifest["command"], "prior");
  EXPECT_EQ(manifest["config_hash"].get<std::string>().size(), 16u);
  EXPECT_FALSE(fs::exists(Path("t.csv.tmp")));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Run({}), kUsage);
  EXPECT_EQ(Run({"frobnicate"}), kUsage);
  EXPECT_EQ(Run({"prior", "--p", "0.2"}), kUsage);
  EXPECT_EQ(Run({"prior", "--p", "0.2", "--lmax", "8", "--out", "x", "--bogus"}), kUsage);
  EXPECT_EQ(Run({"--help"}), kOk);
  EXPECT_NE(out_.str().find("train"), std::string::npos);
}

TEST_F(CliTest, ConfigAndDataErrors) {
  EXPECT_EQ(Run({"prior", "--p", "1.5", "--lmax", "8", "--out", Path("t.csv")}), kConfig);
  EXPECT_EQ(Run({"clean", "--in", Path("missing.jsonl"), "--out", Path("o.jsonl")}),
            kData);
  WriteFileAtomic(Path("bad.json"), R"({"schema_version":1,"gama":0.4})");
  WriteFileAtomic(Path("t.jsonl"), "{\"text\":\"a.\",\"label\":\"ai\"}\n");
  EXPECT_EQ(Run({"train", "--config", Path("bad.json"), "--train", Path("t.jsonl"),
                 "--out", Path("m.json")}),
            kConfig);
  EXPECT_NE(err_.str().find("gama"), std::string::npos);
}

TEST_F(CliTest, CleanAndAugment) {
  WriteFileAtomic(Path("in.jsonl"),
                  "{\"text\":\"Same thing for best sellers .\",\"label\":\"human\",\"id\":\"a\"}\n"
                  "not json\n"
                  "{\"text\":\"One. Two. Three. Four.\",\"label\":\"ai\"}\n");
  const std::string before = ReadFile(Path("in.jsonl"));
  ASSERT_EQ(Run({"clean", "--in", Path("in.jsonl"), "--out", Path("clean.jsonl")}), kOk);
  EXPECT_NE(err_.str().find(":2:"), std::string::npos);
  EXPECT_EQ(ReadFile(Path("in.jsonl")), before);
  const std::string cleaned = ReadFile(Path("clean.jsonl"));
  EXPECT_NE(cleaned.find("\"Same thing for best sellers.\""), std::string::npos);
  EXPECT_NE(cleaned.find("\"id\":\"a\""), std::string::npos);

  ASSERT_EQ(Run({"augment", "--in", Path("clean.jsonl"), "--out", Path("a1.jsonl"),
                 "--psent", "0.5", "--seed", "4"}),
            kOk);
  ASSERT_EQ(Run({"augment", "--in", Path("clean.jsonl"), "--out", Path("a2.jsonl"),
                 "--psent", "0.5", "--seed", "4"}),
            kOk);
  EXPECT_EQ(ReadFile(Path("a1.jsonl")), ReadFile(Path("a2.jsonl")));
}

TEST_F(CliTest, TrainEvalDeterministic) {
  WriteSmallSynth();
  WriteFileAtomic(Path("run.json"),
                  R"({"schema_version":1,"epochs":2,"hash_dim":4096,"seed":5})");
  const std::vector<std::string> train = {"train", "--config", Path("run.json"),
                                          "--train", Path("train.jsonl"), "--dev",
                                          Path("short.jsonl"), "--out", Path("m1.json")};
  ASSERT_EQ(Run(train), kOk) << err_.str();
  std::vector<std::string> again = train;
  again.back() = Path("m2.json");
  ASSERT_EQ(Run(again), kOk);
  EXPECT_EQ(ReadFile(Path("m1.json")), ReadFile(Path("m2.json")));
  EXPECT_EQ(ReadFile(Path("m1.json.metrics.json")), ReadFile(Path("m2.json.metrics.json")));
  const json metrics = json::parse(ReadFile(Path("m1.json.metrics.json")));
  EXPECT_EQ(metrics["history"].size(), 2u);
  EXPECT_TRUE(metrics["dev"].contains("f1"));

  ASSERT_EQ(Run({"eval", "--model", Path("m1.json"), "--test", Path("long.jsonl"),
                 "--buckets", "0:32,32:inf", "--report", Path("r.json")}),
            kOk);
  const json report = json::parse(ReadFile(Path("r.json")));
  EXPECT_EQ(report["buckets"].size(), 2u);
  for (const char* key : {"f1", "precision", "recall", "accuracy", "confusion"}) {
    EXPECT_TRUE(report.contains(key)) << key;
  }
  const json manifest = json::parse(ReadFile(Path("r.json.manifest.json")));
  EXPECT_EQ(manifest["config_hash"], metrics["config_hash"]);
}

TEST_F(CliTest, SeedEnvironmentOverride) {
  WriteSmallSynth();
  WriteFileAtomic(Path("run.json"),
                  R"({"schema_version":1,"epochs":1,"hash_dim":1024,"seed":5})");
  ::setenv("MPU_SEED", "77", 1);
  const int code = Run({"train", "--config", Path("run.json"), "--train",
                        Path("train.jsonl"), "--out", Path("m.json")});
  ::setenv("MPU_SEED", "abc", 1);
  const int bad = Run({"train", "--config", Path("run.json"), "--train",
                       Path("train.jsonl"), "--out", Path("n.json")});
  ::unsetenv("MPU_SEED");
  ASSERT_EQ(code, kOk);
  EXPECT_EQ(json::parse(ReadFile(Path("m.json.metrics.json")))["seed"], 77);
  EXPECT_EQ(bad, kConfig);
}

TEST(RunConfigTest, DefaultsAndCanonicalForm) {
  const TrainConfig c = ParseRunConfig(R"({"schema_version":1})");
  EXPECT_EQ(c.loss.gamma, 0.4);
  EXPECT_EQ(c.prior.p, 0.2);
  EXPECT_EQ(c.multiscale.p_sent, 0.25);
  EXPECT_EQ(c.loss.variant, PuVariant::kNnpu);
  const TrainConfig back = ParseRunConfig(RunConfigToJson(c));
  EXPECT_EQ(RunConfigToJson(back), RunConfigToJson(c));
  EXPECT_EQ(RunConfigHash(back), RunConfigHash(c));
}

TEST(RunConfigTest, ParsesEveryKey) {
  const TrainConfig c = ParseRunConfig(R"({
    "schema_version": 1, "gamma": 0.1, "pu_variant": "upu",
    "prior_mode": "constant", "constant_prior": 0.3, "token_positive_p": 0.25,
    "l_max": 64, "surrogate": "logistic", "p_sent": 0.0,
    "multiscale_schedule": "once", "epochs": 3, "batch_size": 8,
    "learning_rate": 0.05, "momentum": 0.5, "l2": 0.001, "seed": 9,
    "drop_short_below": 12, "word_ngrams": [1], "char_ngrams": [],
    "hash_dim": 1024, "lowercase": false})");
  EXPECT_EQ(c.loss.variant, PuVariant::kUpu);
  EXPECT_EQ(c.loss.prior_mode, PriorMode::kConstant);
  EXPECT_EQ(c.loss.surrogate.kind(), SurrogateKind::kLogistic);
  EXPECT_EQ(c.multiscale_schedule, MultiscaleSchedule::kOnce);
  EXPECT_EQ(c.drop_short_below, 12);
  EXPECT_EQ(c.features.dim, 1024u);
  EXPECT_TRUE(c.features.char_orders.empty());
  EXPECT_FALSE(c.features.lowercase);
  EXPECT_EQ(c.seed, 9u);
}

TEST(RunConfigTest, Rejections) {
  for (const char* bad : {
           R"({})", R"([])", "nope", R"({"schema_version":2})",
           R"({"schema_version":1,"unknown":1})",
           R"({"schema_version":1,"gamma":"high"})",
           R"({"schema_version":1,"pu_variant":"xpu"})",
           R"({"schema_version":1,"hash_dim":1000})",
           R"({"schema_version":1,"multiscale_schedule":"never"})"}) {
    EXPECT_THROW(ParseRunConfig(bad), ConfigError) << bad;
  }
}

TEST(SynthConfigTest, RoundTrip) {
  const SynthConfig c = ParseSynthConfig(R"({"schema_version":1,"seed":4,"signal_prob":0.3})");
  EXPECT_EQ(c.seed, 4u);
  EXPECT_EQ(c.signal_prob, 0.3);
  EXPECT_EQ(SynthConfigToJson(ParseSynthConfig(SynthConfigToJson(c))), SynthConfigToJson(c));
  EXPECT_THROW(ParseSynthConfig(R"({"schema_version":1,"vocab":3})"), ConfigError);
}

}  // namespace
}  // namespace mpu::cli
