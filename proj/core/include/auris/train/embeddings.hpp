// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "auris/data/augment.hpp"
#include "auris/data/labeled_clip.hpp"
#include "auris/features/frontend.hpp"
#include "auris/nn/model.hpp"

namespace auris::train {

struct WindowEmbedding {
  std::string clip_id;
  int window_index = 0;
  int label = 0;
  std::vector<float> values;  // backbone output after global average pool
};

// Runs clips through the frozen backbone up to global average pooling and
// caches the per-window embeddings keyed by (clip_id, window, epoch).
// Without augmentation the epoch key is 0 and entries persist; with
// augmentation each epoch recomputes and the previous epoch is dropped.
class EmbeddingExtractor {
 public:
  EmbeddingExtractor(const nn::ModelWeights& backbone,
                     std::optional<data::AugmentationConfig> augmentation,
                     unsigned threads = 1);

  // Embeddings for every window of every clip, clip order preserved.
  std::vector<WindowEmbedding> extract(
      const std::vector<data::LabeledClip>& clips, std::uint64_t epoch);

  std::uint64_t cache_hits() const { return cache_hits_; }
  std::size_t embedding_dim() const;

 private:
  struct Key {
    std::string clip_id;
    int window;
    std::uint64_t epoch;
    bool operator<(const Key& other) const {
      if (clip_id != other.clip_id) return clip_id < other.clip_id;
      if (window != other.window) return window < other.window;
      return epoch < other.epoch;
    }
  };

  const nn::ModelWeights& backbone_;
  std::optional<data::AugmentationConfig> augmentation_;
  unsigned threads_;
  std::map<Key, std::vector<float>> cache_;
  std::uint64_t cache_epoch_ = 0;
  std::uint64_t cache_hits_ = 0;
};

}  // namespace auris::train
