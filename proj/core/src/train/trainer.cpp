// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/train/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "auris/common/error.hpp"
#include "auris/common/rng.hpp"
#include "auris/eval/metrics.hpp"
#include "auris/train/adam.hpp"
#include "auris/train/embeddings.hpp"
#include "auris/train/losses.hpp"
#include "auris/train/scheduler.hpp"

namespace auris::train {
namespace {

nn::ModelWeights with_head(const nn::ModelWeights& backbone,
                           const std::vector<float>& params, int dim,
                           int class_count) {
  nn::ModelWeights model = backbone;
  for (auto& layer : model.layers) {
    if (layer.kind == nn::LayerKind::Dense) {
      layer.tensors.at(0).assign(params.begin(),
                                 params.begin() + static_cast<long>(dim) * class_count);
      layer.tensors.at(1).assign(params.begin() + static_cast<long>(dim) * class_count,
                                 params.end());
      return model;
    }
  }
  throw ShapeError("backbone has no dense head layer");
}

struct ValScores {
  std::vector<std::vector<float>> scores;
  std::vector<int> truth;
  double loss = 0.0;
};

ValScores validate_head(const std::vector<WindowEmbedding>& embeddings,
                        const std::vector<float>& params, int dim,
                        int class_count, const FocalLoss& focal,
                        double smoothing) {
  ValScores out;
  out.scores.reserve(embeddings.size());
  out.truth.reserve(embeddings.size());
  const float* weights = params.data();
  const float* bias = params.data() + static_cast<std::size_t>(dim) * class_count;

  double loss_sum = 0.0;
  for (const auto& e : embeddings) {
    std::vector<float> scores(class_count);
    for (int c = 0; c < class_count; ++c) {
      double z = bias[c];
      for (int j = 0; j < dim; ++j) {
        z += static_cast<double>(e.values[j]) * weights[static_cast<std::size_t>(j) * class_count + c];
      }
      const double p = sigmoid(z);
      const double target =
          (e.label == c ? 1.0 : 0.0) * (1.0 - smoothing) + smoothing / 2.0;
      loss_sum += focal.value(p, target);
      scores[c] = static_cast<float>(p);
    }
    out.scores.push_back(std::move(scores));
    out.truth.push_back(e.label);
  }
  out.loss = loss_sum / (static_cast<double>(embeddings.size()) * class_count);
  return out;
}

}  // namespace

TrainResult train_head(const std::vector<data::LabeledClip>& train_clips,
                       const std::vector<data::LabeledClip>& val_clips,
                       const nn::ModelWeights& backbone,
                       const TrainConfig& cfg) {
  if (!(cfg.decay_factor > 0.0 && cfg.decay_factor < 1.0) ||
      cfg.plateau_patience_epochs <= 0 || cfg.early_stop_patience_epochs <= 0 ||
      !(cfg.label_smoothing >= 0.0 && cfg.label_smoothing < 0.5) ||
      cfg.max_epochs < 1) {
    throw std::invalid_argument("malformed training configuration");
  }
  const int class_count = backbone.class_count;
  if (train_clips.empty() || val_clips.empty()) {
    throw TrainError(TrainErrc::EmptySplit,
                     "training and validation splits must be non-empty");
  }
  std::set<int> seen;
  for (const auto& clip : train_clips) seen.insert(clip.label);
  for (int c = 0; c < class_count; ++c) {
    if (!seen.count(c)) {
      throw TrainError(TrainErrc::MissingLabelInTrainingSplit,
                       "label index " + std::to_string(c) +
                           " has no training clips");
    }
  }

  EmbeddingExtractor train_extractor(backbone, cfg.augmentation, cfg.threads);
  EmbeddingExtractor val_extractor(backbone, std::nullopt, cfg.threads);
  const int dim = static_cast<int>(train_extractor.embedding_dim());

  // Head parameters: [in][out] weights then bias, one flat buffer.
  const std::size_t param_count =
      static_cast<std::size_t>(dim) * class_count + class_count;
  std::vector<float> params(param_count, 0.0f);
  if (cfg.head_init == HeadInit::TruncatedNormal) {
    auto rng = make_rng(mix_seed(cfg.seed, fnv1a64("head-init")));
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::size_t i = 0; i < param_count - class_count; ++i) {
      double x;
      do {
        x = normal(rng);
      } while (std::abs(x) > 2.0);
      params[i] = static_cast<float>(x * 0.09);
    }
  }

  const FocalLoss focal{cfg.focal_alpha, cfg.focal_gamma};
  AdamState adam(param_count);
  PlateauScheduler scheduler(cfg.learning_rate, cfg.plateau_patience_epochs,
                             cfg.early_stop_patience_epochs,
                             cfg.decay_factor);

  const auto val_embeddings = val_extractor.extract(val_clips, 0);

  TrainResult result;
  double best_loss = std::numeric_limits<double>::infinity();
  std::vector<float> best_params = params;

  std::vector<float> grads(param_count);
  for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    const double lr = scheduler.learning_rate();
    const auto embeddings =
        train_extractor.extract(train_clips, static_cast<std::uint64_t>(epoch));

    std::vector<std::size_t> order(embeddings.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto shuffle_rng = make_rng(
        mix_seed(cfg.seed, fnv1a64("epoch-shuffle"), static_cast<std::uint64_t>(epoch)));
    deterministic_shuffle(order, shuffle_rng);

    double epoch_loss_sum = 0.0;
    std::size_t examples_seen = 0;
    const std::size_t batch =
        std::max<std::size_t>(1, static_cast<std::size_t>(cfg.batch_size));
    const float* weights = params.data();
    const float* bias =
        params.data() + static_cast<std::size_t>(dim) * class_count;

    for (std::size_t begin = 0; begin < order.size(); begin += batch) {
      const std::size_t end = std::min(order.size(), begin + batch);
      const std::size_t batch_size = end - begin;
      std::fill(grads.begin(), grads.end(), 0.0f);

      double batch_loss = 0.0;
      const double grad_norm =
          1.0 / (static_cast<double>(batch_size) * class_count);
      for (std::size_t k = begin; k < end; ++k) {
        const auto& e = embeddings[order[k]];
        for (int c = 0; c < class_count; ++c) {
          double z = bias[c];
          for (int j = 0; j < dim; ++j) {
            z += static_cast<double>(e.values[j]) *
                 weights[static_cast<std::size_t>(j) * class_count + c];
          }
          const double p = sigmoid(z);
          const double target =
              (e.label == c ? 1.0 : 0.0) * (1.0 - cfg.label_smoothing) +
              cfg.label_smoothing / 2.0;
          batch_loss += focal.value(p, target);
          const double dz = focal.dvalue_dlogit(p, target) * grad_norm;
          for (int j = 0; j < dim; ++j) {
            grads[static_cast<std::size_t>(j) * class_count + c] +=
                static_cast<float>(e.values[j] * dz);
          }
          grads[static_cast<std::size_t>(dim) * class_count + c] +=
              static_cast<float>(dz);
        }
      }
      batch_loss /= static_cast<double>(batch_size) * class_count;
      epoch_loss_sum += batch_loss * static_cast<double>(batch_size);
      examples_seen += batch_size;
      adam_update(params, grads, adam, lr);
    }

    const double train_loss = epoch_loss_sum / static_cast<double>(examples_seen);
    const auto val = validate_head(val_embeddings, params, dim, class_count,
                                   focal, cfg.label_smoothing);
    const double val_map = eval::mean_average_precision(
        val.scores, val.truth, class_count, /*warn=*/false);
    const double val_acc =
        eval::confusion_and_accuracy(val.scores, val.truth, class_count).second;

    if (!std::isfinite(train_loss) || !std::isfinite(val.loss)) {
      throw TrainError(TrainErrc::Divergence,
                       "non-finite loss at epoch " + std::to_string(epoch) +
                           " (train " + std::to_string(train_loss) +
                           ", val " + std::to_string(val.loss) + ")");
    }

    result.history.epochs.push_back(
        {epoch, lr, train_loss, val.loss, val_map, val_acc});
    if (val.loss < best_loss) {
      best_loss = val.loss;
      best_params = params;
      result.history.best_epoch = epoch;
    }
    if (scheduler.observe(val.loss) == PlateauAction::Stop) break;
  }

  result.best_model = with_head(backbone, best_params, dim, class_count);
  result.final_model = with_head(backbone, params, dim, class_count);
  return result;
}

}  // namespace auris::train
