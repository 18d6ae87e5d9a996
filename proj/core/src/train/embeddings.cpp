// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/train/embeddings.hpp"

#include "auris/common/parallel.hpp"

namespace auris::train {

EmbeddingExtractor::EmbeddingExtractor(
    const nn::ModelWeights& backbone,
    std::optional<data::AugmentationConfig> augmentation, unsigned threads)
    : backbone_(backbone),
      augmentation_(std::move(augmentation)),
      threads_(threads) {}

std::size_t EmbeddingExtractor::embedding_dim() const {
  for (const auto& layer : backbone_.layers) {
    if (layer.kind == nn::LayerKind::GlobalAvgPool) {
      return static_cast<std::size_t>(layer.cin);
    }
  }
  return 0;
}

std::vector<WindowEmbedding> EmbeddingExtractor::extract(
    const std::vector<data::LabeledClip>& clips, std::uint64_t epoch) {
  const std::uint64_t key_epoch = augmentation_ ? epoch : 0;
  if (augmentation_ && key_epoch != cache_epoch_) {
    cache_.clear();  // augmented embeddings are only valid for their epoch
    cache_epoch_ = key_epoch;
  }

  // Clips not yet cached get computed (in parallel), then results are
  // assembled in clip order from the cache.
  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < clips.size(); ++i) {
    if (cache_.find(Key{clips[i].clip_id, 0, key_epoch}) == cache_.end()) {
      missing.push_back(i);
    } else {
      ++cache_hits_;
    }
  }

  std::vector<std::vector<std::vector<float>>> computed(missing.size());
  parallel_for(missing.size(), threads_, [&](std::size_t mi) {
    thread_local features::LogMelFrontend frontend;
    const auto& clip = clips[missing[mi]];
    audio::Waveform w = clip.load();
    if (augmentation_) {
      w = data::augment_clip(w, *augmentation_, clip.clip_id, epoch);
    }
    auto patches = frontend.compute_clip(w);
    computed[mi].reserve(patches.size());
    for (const auto& patch : patches) {
      computed[mi].push_back(nn::forward_embedding(patch, backbone_));
    }
  });
  for (std::size_t mi = 0; mi < missing.size(); ++mi) {
    const auto& clip = clips[missing[mi]];
    for (std::size_t wdx = 0; wdx < computed[mi].size(); ++wdx) {
      cache_[Key{clip.clip_id, static_cast<int>(wdx), key_epoch}] =
          std::move(computed[mi][wdx]);
    }
  }

  std::vector<WindowEmbedding> out;
  for (const auto& clip : clips) {
    for (int wdx = 0;; ++wdx) {
      auto it = cache_.find(Key{clip.clip_id, wdx, key_epoch});
      if (it == cache_.end()) break;
      WindowEmbedding e;
      e.clip_id = clip.clip_id;
      e.window_index = wdx;
      e.label = clip.label;
      e.values = it->second;
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace auris::train
