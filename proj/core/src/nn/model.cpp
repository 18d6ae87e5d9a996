// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/nn/model.hpp"

#include <string>

#include "auris/common/error.hpp"
#include "auris/nn/ops.hpp"

namespace auris::nn {
namespace {

// Executes layers [0, stop_after) and returns the flattened result of the
// last one. `stop_after_pool` cuts the run right after GlobalAvgPool.
std::vector<float> run_layers(const features::LogMelPatch& patch,
                              const ModelWeights& m, bool stop_after_pool) {
  Tensor3 t(patch.frames, patch.bands, 1);
  for (std::size_t i = 0; i < patch.values.size(); ++i) {
    t.v[i] = patch.values[i];
  }

  std::vector<float> flat;
  bool pooled = false;
  for (const auto& layer : m.layers) {
    switch (layer.kind) {
      case LayerKind::Conv:
        t = conv2d(t, layer.tensors.at(0), layer.kh, layer.kw, layer.cin,
                   layer.cout, layer.stride);
        break;
      case LayerKind::DepthwiseConv:
        t = depthwise_conv2d(t, layer.tensors.at(0), layer.kh, layer.kw,
                             layer.stride);
        break;
      case LayerKind::BatchNorm:
        t = batch_norm_inference(t, layer.tensors.at(0), layer.tensors.at(1),
                                 layer.tensors.at(2), layer.tensors.at(3),
                                 layer.epsilon);
        break;
      case LayerKind::Relu:
        if (pooled) {
          for (auto& x : flat) {
            if (x < 0.0f) x = 0.0f;
          }
        } else {
          relu_inplace(t);
        }
        break;
      case LayerKind::GlobalAvgPool:
        flat = global_avg_pool(t);
        pooled = true;
        if (stop_after_pool) return flat;
        break;
      case LayerKind::Dense:
        if (!pooled) {
          throw ShapeError("dense layer before global average pooling");
        }
        flat = dense(flat, layer.tensors.at(0), layer.tensors.at(1),
                     layer.cin, layer.cout);
        break;
      case LayerKind::Sigmoid:
        if (!pooled) {
          throw ShapeError("sigmoid before global average pooling");
        }
        sigmoid_inplace(flat);
        break;
    }
  }
  if (!pooled) {
    throw ShapeError("model has no global average pooling layer");
  }
  return flat;
}

}  // namespace

const char* layer_kind_name(LayerKind kind) {
  switch (kind) {
    case LayerKind::Conv: return "conv";
    case LayerKind::DepthwiseConv: return "depthwise_conv";
    case LayerKind::BatchNorm: return "batch_norm";
    case LayerKind::Relu: return "relu";
    case LayerKind::GlobalAvgPool: return "global_avg_pool";
    case LayerKind::Dense: return "dense";
    case LayerKind::Sigmoid: return "sigmoid";
  }
  return "unknown";
}

std::int64_t count_parameters(const ModelWeights& m) {
  std::int64_t total = 0;
  for (const auto& layer : m.layers) {
    for (const auto& t : layer.tensors) {
      total += static_cast<std::int64_t>(t.size());
    }
  }
  return total;
}

ScoreVector forward_patch(const features::LogMelPatch& patch,
                          const ModelWeights& m) {
  ScoreVector out;
  out.scores = run_layers(patch, m, /*stop_after_pool=*/false);
  if (static_cast<int>(out.scores.size()) != m.class_count) {
    throw ShapeError("model output width " +
                     std::to_string(out.scores.size()) +
                     " != class count " + std::to_string(m.class_count));
  }
  return out;
}

std::vector<float> forward_embedding(const features::LogMelPatch& patch,
                                     const ModelWeights& m) {
  return run_layers(patch, m, /*stop_after_pool=*/true);
}

std::vector<ScoreVector> infer_clip(const audio::Waveform& w,
                                    const ModelWeights& m,
                                    features::LogMelFrontend& frontend) {
  auto patches = frontend.compute_clip(w);
  std::vector<ScoreVector> out;
  out.reserve(patches.size());
  for (std::size_t i = 0; i < patches.size(); ++i) {
    ScoreVector sv = forward_patch(patches[i], m);
    sv.window_index = static_cast<int>(i);
    out.push_back(std::move(sv));
  }
  return out;
}

}  // namespace auris::nn
