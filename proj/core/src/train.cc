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

#include "mpu/train.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <span>
#include <string>

#include "mpu/error.h"
#include "mpu/evaluate.h"
#include "mpu/random.h"

namespace mpu {
namespace {

constexpr std::uint64_t kShuffleSalt = 0x73687566666c65ULL;

struct ScoredBatch {
  std::vector<double> scores;
  std::vector<Sign> labels;
  std::vector<int> lengths;
  bool has_pos = false;
  bool has_unl = false;
};

ScoredBatch ScoreBatch(const LinearModel& model,
                       const std::vector<Example>& batch) {
  ScoredBatch sb;
  sb.scores.reserve(batch.size());
  for (const Example& ex : batch) {
    sb.scores.push_back(model.Score(ex.features));
    sb.labels.push_back(ex.label);
    sb.lengths.push_back(ex.length);
    (ex.label == Sign::kPositive ? sb.has_pos : sb.has_unl) = true;
  }
  return sb;
}

// The PU term needs both classes; a one-class batch falls back to PN.
LossGradient BatchLoss(const ScoredBatch& sb, const LossConfig& loss,
                       const PriorTable* table) {
  LossConfig effective = loss;
  if (!(sb.has_pos && sb.has_unl)) effective.gamma = 0.0;
  return TotalLossGradient({sb.scores, sb.labels, sb.lengths}, effective,
                           table);
}

// dst[j] += sum_i grad[i] * x_i[j]; returns sum_i grad[i] (the bias term).
double AccumulateDataGradient(const std::vector<Example>& batch,
                              std::span<const double> grad,
                              std::span<double> dst) {
  double bias = 0.0;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const SparseVector& x = batch[i].features;
    for (std::size_t k = 0; k < x.size(); ++k) {
      dst[x.index[k]] += grad[i] * x.value[k];
    }
    bias += grad[i];
  }
  return bias;
}

}  // namespace

void TrainConfig::Validate() const {
  if (epochs < 1) throw ConfigError("epochs must be >= 1");
  if (batch_size < 1) throw ConfigError("batch_size must be >= 1");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw ConfigError("learning_rate must be > 0");
  }
  if (!(momentum >= 0.0 && momentum < 1.0)) {
    throw ConfigError("momentum must be in [0,1)");
  }
  if (!(l2 >= 0.0) || !std::isfinite(l2)) throw ConfigError("l2 must be >= 0");
  if (drop_short_below && *drop_short_below < 1) {
    throw ConfigError("drop_short_below must be >= 1");
  }
  loss.Validate();
  multiscale.Validate();
  prior.Validate();
  features.Validate();
}

WeightGradient BatchGradient(const LinearModel& model,
                             const std::vector<Example>& batch,
                             const LossConfig& loss, const PriorTable* table,
                             double l2) {
  const ScoredBatch sb = ScoreBatch(model, batch);
  const LossGradient lg = BatchLoss(sb, loss, table);
  WeightGradient out;
  out.loss = lg.value;
  out.weights.assign(model.weights().size(), 0.0);
  for (std::size_t j = 0; j < model.weights().size(); ++j) {
    const double w = model.weights()[j];
    out.loss += 0.5 * l2 * w * w;
    out.weights[j] = l2 * w;
  }
  out.bias = AccumulateDataGradient(batch, lg.grad, out.weights);
  return out;
}

TrainResult Train(const Corpus& corpus, const TrainConfig& config,
                  const Corpus* dev) {
  config.Validate();
  const bool any_human = std::any_of(corpus.begin(), corpus.end(), [](auto& r) {
    return r.label == Origin::kHuman;
  });
  const bool any_ai = std::any_of(corpus.begin(), corpus.end(), [](auto& r) {
    return r.label == Origin::kAi;
  });
  if (!any_human || !any_ai) {
    throw ConfigError("training corpus needs both human and ai samples");
  }

  std::unique_ptr<PriorTable> table;
  if (config.loss.gamma > 0.0 &&
      config.loss.prior_mode == PriorMode::kMultiscale) {
    table = std::make_unique<PriorTable>(PriorTable::Build(config.prior));
  }
  const Multiscaler multiscaler(
      MultiscaleConfig{config.multiscale.p_sent, config.seed});
  const FeatureConfig& features = config.features;

  TrainResult result{LinearModel(features), {}};
  LinearModel& model = result.model;
  std::vector<double>& w = model.weights();
  std::vector<double> velocity(w.size(), 0.0);
  double bias_velocity = 0.0;
  const double mu = config.momentum;
  const double lr = config.learning_rate;

  std::vector<std::string> texts(corpus.size());
  std::vector<int> lengths(corpus.size());
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    // (1) substitution by multiscaled text; (2) short-text drop.
    const auto draw = static_cast<std::uint64_t>(
        config.multiscale_schedule == MultiscaleSchedule::kOnce ? 0 : epoch);
    const bool redraw = epoch == 0 ||
                        (multiscaler.config().enabled() &&
                         config.multiscale_schedule ==
                             MultiscaleSchedule::kPerEpoch);
    if (redraw) {
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        texts[i] = multiscaler.config().enabled()
                       ? multiscaler.Apply(corpus[i].text, draw, i)
                       : corpus[i].text;
        lengths[i] = TokenLength(texts[i], features.lowercase);
      }
    }
    std::vector<std::size_t> order;
    order.reserve(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (config.drop_short_below && lengths[i] < *config.drop_short_below) {
        continue;
      }
      order.push_back(i);
    }
    if (order.empty()) {
      throw ConfigError("drop_short_below removed every training sample");
    }
    // (3) shuffle.
    RandomStream shuffle_rng = RandomStream::ForKey(
        config.seed ^ kShuffleSalt, static_cast<std::uint64_t>(epoch), 0);
    shuffle_rng.Shuffle(std::span<std::size_t>(order));

    // (4) minibatch updates.
    EpochStats stats;
    stats.epoch = epoch + 1;
    double loss_sum = 0.0;
    std::int64_t batches = 0;
    std::vector<Example> batch;
    for (std::size_t start = 0; start < order.size();
         start += static_cast<std::size_t>(config.batch_size)) {
      const std::size_t end = std::min(
          order.size(), start + static_cast<std::size_t>(config.batch_size));
      batch.clear();
      for (std::size_t k = start; k < end; ++k) {
        const std::size_t i = order[k];
        batch.push_back({Featurize(Tokenize(texts[i], features.lowercase),
                                   features),
                         ToSign(corpus[i].label), lengths[i]});
      }
      const ScoredBatch sb = ScoreBatch(model, batch);
      const LossGradient lg = BatchLoss(sb, config.loss, table.get());
      loss_sum += lg.value;
      ++batches;

      // v <- mu v + grad; w <- w - lr v. The l2 term is dense, the data
      // term touches only the batch's buckets.
      for (std::size_t j = 0; j < w.size(); ++j) {
        velocity[j] = mu * velocity[j] + config.l2 * w[j];
      }
      const double bias_grad =
          AccumulateDataGradient(batch, lg.grad, velocity);
      for (std::size_t j = 0; j < w.size(); ++j) w[j] -= lr * velocity[j];
      bias_velocity = mu * bias_velocity + bias_grad;
      model.bias() -= lr * bias_velocity;
    }
    stats.samples = static_cast<std::int64_t>(order.size());
    stats.train_loss = loss_sum / static_cast<double>(batches);
    if (dev != nullptr && !dev->empty()) {
      stats.dev_f1 = Evaluate(model, *dev).metrics.f1;
    }
    result.history.push_back(stats);
  }
  return result;
}

}  // namespace mpu
