// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "auris/data/augment.hpp"
#include "auris/data/labeled_clip.hpp"
#include "auris/nn/model.hpp"

namespace auris::train {

enum class HeadInit { Zero, TruncatedNormal };

struct TrainConfig {
  double learning_rate = 1e-5;
  int max_epochs = 100;
  int plateau_patience_epochs = 3;
  double decay_factor = 0.5;
  int early_stop_patience_epochs = 6;
  double focal_alpha = 0.25;
  double focal_gamma = 2.0;
  double label_smoothing = 0.1;
  std::uint64_t seed = 0;
  // Disabled when unset; applied on the fly to training clips only.
  std::optional<data::AugmentationConfig> augmentation;
  bool head_only = true;  // the only implemented regime
  int batch_size = 32;
  HeadInit head_init = HeadInit::TruncatedNormal;
  unsigned threads = 1;
};

struct EpochRecord {
  int epoch = 0;           // 1-based
  double learning_rate = 0.0;  // rate in effect during this epoch
  double train_loss = 0.0;
  double val_loss = 0.0;
  double val_map = 0.0;
  double val_accuracy = 0.0;
};

struct TrainingHistory {
  std::vector<EpochRecord> epochs;
  int best_epoch = 0;  // 1-based epoch with the lowest validation loss
};

struct TrainResult {
  nn::ModelWeights best_model;   // backbone + head from the best epoch
  nn::ModelWeights final_model;  // backbone + head after the last epoch
  TrainingHistory history;
};

// Trains only the final dense layer on frozen-backbone embeddings with
// focal loss over smoothed targets, Adam, plateau decay and early stop.
// Deterministic under (seed, data, config). Windows inherit clip labels;
// training order reshuffles every epoch.
TrainResult train_head(const std::vector<data::LabeledClip>& train_clips,
                       const std::vector<data::LabeledClip>& val_clips,
                       const nn::ModelWeights& backbone,
                       const TrainConfig& cfg);

}  // namespace auris::train
