// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "auris/audio/waveform.hpp"
#include "auris/features/frontend.hpp"
#include "auris/nn/tensor.hpp"

namespace auris::nn {

enum class LayerKind : std::uint8_t {
  Conv = 0,
  DepthwiseConv = 1,
  BatchNorm = 2,
  Relu = 3,
  GlobalAvgPool = 4,
  Dense = 5,
  Sigmoid = 6,
};

const char* layer_kind_name(LayerKind kind);

enum class Dtype : std::uint8_t {
  F32 = 0,
  F16 = 1,
};

// One layer of the network. Tensors are kept in f32 in memory regardless
// of the storage dtype:
//   Conv:          {kernel [kh*kw*cin*cout]}          (no bias; BN follows)
//   DepthwiseConv: {kernel [kh*kw*cin]}
//   BatchNorm:     {gamma, beta, moving_mean, moving_var}, plus epsilon
//   Dense:         {weights [cin*cout], bias [cout]}
//   Relu/GlobalAvgPool/Sigmoid: no tensors
struct LayerSpec {
  LayerKind kind = LayerKind::Relu;
  int kh = 0;
  int kw = 0;
  int cin = 0;
  int cout = 0;
  int stride = 1;
  float epsilon = 0.0f;
  std::vector<std::vector<float>> tensors;
};

struct ModelWeights {
  std::uint16_t format_version = 1;
  Dtype dtype = Dtype::F32;
  int class_count = 0;
  std::vector<std::string> labels;
  std::vector<LayerSpec> layers;
};

struct ScoreVector {
  int window_index = 0;
  std::vector<float> scores;  // per-label sigmoid confidences in [0, 1]
};

// Total stored elements across all layer tensors (batch-norm moving
// statistics included).
std::int64_t count_parameters(const ModelWeights& m);

// Runs the full layer list on one 96x64 patch; returns per-label scores.
ScoreVector forward_patch(const features::LogMelPatch& patch,
                          const ModelWeights& m);

// Runs the layer list up to and including global average pooling; the
// 1024-dim embedding feeds head-only training.
std::vector<float> forward_embedding(const features::LogMelPatch& patch,
                                     const ModelWeights& m);

// frame_windows + log-mel + forward_patch, one ScoreVector per window.
// Window scores are never combined.
std::vector<ScoreVector> infer_clip(const audio::Waveform& w,
                                    const ModelWeights& m,
                                    features::LogMelFrontend& frontend);

}  // namespace auris::nn
