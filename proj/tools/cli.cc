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

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mpu/data.h"
#include "mpu/error.h"
#include "mpu/evaluate.h"
#include "mpu/io.h"
#include "mpu/multiscale.h"
#include "mpu/prior.h"
#include "mpu/synth.h"
#include "mpu/train.h"
#include "run_config.h"

namespace mpu::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kToolVersion = "0.1.0";

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void WriteManifest(const fs::path& primary_output, std::string_view command,
                   const json& args, const std::string& config_hash,
                   std::optional<std::uint64_t> seed,
                   const std::vector<fs::path>& outputs) {
  json outs = json::array();
  for (const fs::path& p : outputs) outs.push_back(p.string());
  const json manifest = {
      {"tool", "mpu"},
      {"version", kToolVersion},
      {"command", command},
      {"args", args},
      {"config_hash", config_hash},
      {"seed", seed ? json(*seed) : json(nullptr)},
      {"outputs", outs},
  };
  fs::path path = primary_output;
  path += ".manifest.json";
  WriteFileAtomic(path, manifest.dump(2) + "\n");
}

Corpus LoadCorpus(const fs::path& path, std::ostream& err) {
  LoadResult result = LoadJsonl(path);
  for (const LineError& e : result.errors) {
    err << path.string() << ":" << e.line << ": " << e.message << "\n";
  }
  if (result.records.empty()) throw DataError(path.string() + ": no records");
  return std::move(result.records);
}

std::string CorpusToJsonl(const Corpus& records) {
  std::ostringstream os;
  WriteJsonl(os, records);
  return os.str();
}

// --- prior ---------------------------------------------------------------

struct PriorArgs {
  double p = 0.2;
  int lmax = 512;
  std::string out;
};

int RunPrior(const PriorArgs& a, std::ostream& out) {
  const PriorConfig config{a.p, a.lmax};
  const PriorTable table = PriorTable::Build(config);
  std::string csv = "l,prior,top_state_mass\n";
  for (int l = 1; l <= a.lmax; ++l) {
    csv += std::to_string(l) + "," + FormatDouble(table.Lookup(l)) + "," +
           FormatDouble(TopStateMass(l, a.p)) + "\n";
  }
  WriteFileAtomic(a.out, csv);
  const json args = {{"p", a.p}, {"lmax", a.lmax}};
  WriteManifest(a.out, "prior", args, HashHex(args.dump()), std::nullopt,
                {a.out});
  out << "wrote " << a.lmax << " priors to " << a.out << "\n";
  return kOk;
}

// --- augment -------------------------------------------------------------

struct AugmentArgs {
  std::string in;
  std::string out;
  double psent = 0.25;
  std::uint64_t seed = 0;
};

int RunAugment(const AugmentArgs& a, std::ostream& out, std::ostream& err) {
  Corpus corpus = LoadCorpus(a.in, err);
  const Multiscaler multiscaler(MultiscaleConfig{a.psent, a.seed});
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    corpus[i].text = multiscaler.Apply(corpus[i].text, 0, i);
  }
  WriteFileAtomic(a.out, CorpusToJsonl(corpus));
  const json args = {{"in", a.in}, {"psent", a.psent}, {"seed", a.seed}};
  WriteManifest(a.out, "augment", args, HashHex(args.dump()), a.seed,
                {a.out});
  out << "multiscaled " << corpus.size() << " records into " << a.out << "\n";
  return kOk;
}

// --- clean ---------------------------------------------------------------

struct CleanArgs {
  std::string in;
  std::string out;
};

int RunClean(const CleanArgs& a, std::ostream& out, std::ostream& err) {
  Corpus corpus = LoadCorpus(a.in, err);
  std::size_t changed = 0;
  for (Record& r : corpus) {
    std::string cleaned = CleanSpaces(r.text);
    if (cleaned != r.text) ++changed;
    r.text = std::move(cleaned);
  }
  WriteFileAtomic(a.out, CorpusToJsonl(corpus));
  const json args = {{"in", a.in}};
  WriteManifest(a.out, "clean", args, HashHex(args.dump()), std::nullopt,
                {a.out});
  out << "cleaned " << changed << " of " << corpus.size() << " records\n";
  return kOk;
}

// --- synth ---------------------------------------------------------------

struct SynthArgs {
  std::string config;
  std::string out_train;
  std::string out_test_short;
  std::string out_test_long;
};

int RunSynth(const SynthArgs& a, std::ostream& out) {
  const SynthConfig config = ParseSynthConfig(ReadFile(a.config));
  const SynthGenerator generator(config);
  const SynthBenchmark bench = generator.GenerateBenchmark();
  WriteFileAtomic(a.out_train, CorpusToJsonl(bench.train));
  WriteFileAtomic(a.out_test_short, CorpusToJsonl(bench.test_short));
  WriteFileAtomic(a.out_test_long, CorpusToJsonl(bench.test_long));
  const json args = json::parse(SynthConfigToJson(config));
  WriteManifest(a.out_train, "synth", args, HashHex(SynthConfigToJson(config)),
                config.seed,
                {a.out_train, a.out_test_short, a.out_test_long});
  out << "generated " << bench.train.size() << " train, "
      << bench.test_short.size() << " short test, " << bench.test_long.size()
      << " long test records\n";
  return kOk;
}

// --- train ---------------------------------------------------------------

struct TrainArgs {
  std::string config;
  std::string train;
  std::string dev;
  std::string out;
};

std::uint64_t ParseSeedOverride(const char* text) {
  std::uint64_t value = 0;
  const std::string_view s(text);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("MPU_SEED must be an unsigned integer, got '" +
                      std::string(s) + "'");
  }
  return value;
}

int RunTrain(const TrainArgs& a, std::ostream& out, std::ostream& err) {
  TrainConfig config = ParseRunConfig(ReadFile(a.config));
  if (const char* env = std::getenv("MPU_SEED"); env && *env) {
    config.seed = ParseSeedOverride(env);
  }
  const std::string config_hash = RunConfigHash(config);
  const Corpus train = LoadCorpus(a.train, err);
  Corpus dev;
  if (!a.dev.empty()) dev = LoadCorpus(a.dev, err);

  const TrainResult result =
      Train(train, config, dev.empty() ? nullptr : &dev);
  SaveModel(result.model, ModelFile{config_hash}, a.out);

  json history = json::array();
  for (const EpochStats& s : result.history) {
    history.push_back({{"epoch", s.epoch},
                       {"train_loss", s.train_loss},
                       {"samples", s.samples},
                       {"dev_f1", s.dev_f1 ? json(*s.dev_f1) : json(nullptr)}});
  }
  json metrics = {{"config_hash", config_hash},
                  {"seed", config.seed},
                  {"history", history},
                  {"dev", nullptr}};
  if (!dev.empty()) metrics["dev"] = json::parse(ReportToJson(Evaluate(result.model, dev)));
  fs::path metrics_path = a.out;
  metrics_path += ".metrics.json";
  WriteFileAtomic(metrics_path, metrics.dump(2) + "\n");

  const json args = {{"config", json::parse(RunConfigToJson(config))},
                     {"train", a.train},
                     {"dev", a.dev}};
  WriteManifest(a.out, "train", args, config_hash, config.seed,
                {a.out, metrics_path});
  const EpochStats& last = result.history.back();
  out << "trained " << result.history.size() << " epochs, final loss "
      << last.train_loss;
  if (last.dev_f1) out << ", dev F1 " << *last.dev_f1;
  out << "\n";
  return kOk;
}

// --- eval ----------------------------------------------------------------

struct EvalArgs {
  std::string model;
  std::string test;
  std::string buckets = "0:32,32:inf";
  std::string report;
};

int RunEval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  const LoadedModel loaded = LoadModel(a.model);
  const Corpus test = LoadCorpus(a.test, err);
  const std::vector<LengthBucket> buckets = ParseBuckets(a.buckets);
  const EvalReport report = Evaluate(loaded.model, test, buckets);
  WriteFileAtomic(a.report, ReportToJson(report));
  const json args = {{"model", a.model}, {"test", a.test},
                     {"buckets", a.buckets}};
  WriteManifest(a.report, "eval", args, loaded.meta.train_config_hash,
                std::nullopt, {a.report});
  out << "F1 " << report.metrics.f1 << " precision "
      << report.metrics.precision << " recall " << report.metrics.recall
      << " accuracy " << report.metrics.accuracy << "\n";
  for (const BucketReport& br : report.buckets) {
    out << "  [" << br.bucket.Label() << ") n=" << br.confusion.total()
        << " F1 " << br.metrics.f1 << "\n";
  }
  return kOk;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Multiscale PU training toolkit for machine-text detectors",
               "mpu"};
  app.require_subcommand(1);

  PriorArgs prior_args;
  auto* prior = app.add_subcommand("prior", "Tabulate length-variant priors");
  prior->add_option("--p", prior_args.p, "Token-positive probability")
      ->required();
  prior->add_option("--lmax", prior_args.lmax, "Largest length")->required();
  prior->add_option("--out", prior_args.out, "CSV output path")->required();

  AugmentArgs augment_args;
  auto* augment =
      app.add_subcommand("augment", "Apply one text multiscaling pass");
  augment->add_option("--in", augment_args.in, "Input JSONL")->required();
  augment->add_option("--out", augment_args.out, "Output JSONL")->required();
  augment->add_option("--psent", augment_args.psent,
                      "Sentence drop probability");
  augment->add_option("--seed", augment_args.seed, "Random seed");

  CleanArgs clean_args;
  auto* clean = app.add_subcommand(
      "clean", "Remove whitespace before closing punctuation");
  clean->add_option("--in", clean_args.in, "Input JSONL")->required();
  clean->add_option("--out", clean_args.out, "Output JSONL")->required();

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "Generate the synthetic corpus");
  synth->add_option("--config", synth_args.config, "Synth config JSON")
      ->required();
  synth->add_option("--out-train", synth_args.out_train)->required();
  synth->add_option("--out-test-short", synth_args.out_test_short)
      ->required();
  synth->add_option("--out-test-long", synth_args.out_test_long)->required();

  TrainArgs train_args;
  auto* train = app.add_subcommand("train", "Train a detector");
  train->add_option("--config", train_args.config, "Run config JSON")
      ->required();
  train->add_option("--train", train_args.train, "Training JSONL")
      ->required();
  train->add_option("--dev", train_args.dev, "Held-out JSONL");
  train->add_option("--out", train_args.out, "Model file")->required();

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a detector");
  eval->add_option("--model", eval_args.model, "Model file")->required();
  eval->add_option("--test", eval_args.test, "Test JSONL")->required();
  eval->add_option("--buckets", eval_args.buckets,
                   "Token-length buckets, e.g. 0:32,32:inf");
  eval->add_option("--report", eval_args.report, "Report JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (prior->parsed()) return RunPrior(prior_args, out);
    if (augment->parsed()) return RunAugment(augment_args, out, err);
    if (clean->parsed()) return RunClean(clean_args, out, err);
    if (synth->parsed()) return RunSynth(synth_args, out);
    if (train->parsed()) return RunTrain(train_args, out, err);
    if (eval->parsed()) return RunEval(eval_args, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << "\n";
    return kRuntime;
  }
  err << "usage error: no subcommand\n";
  return kUsage;
}

}  // namespace mpu::cli
