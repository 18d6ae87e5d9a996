// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "auris/nn/model.hpp"

namespace auris::nn {

// Width schedule of the 13 depthwise-separable blocks (pointwise output
// channels; true marks a stride-2 depthwise stage).
struct BlockSpec {
  int out_channels;
  bool stride2;
};
const std::vector<BlockSpec>& mobilenet_blocks();

inline constexpr int kStemFilters = 32;
inline constexpr int kEmbeddingDim = 1024;
inline constexpr float kBatchNormEpsilon = 1e-3f;

// Builds the classifier graph: stem conv (3x3, stride 2, 32 filters) + BN +
// ReLU, 13 blocks of [depthwise 3x3 + BN + ReLU + pointwise 1x1 + BN +
// ReLU], global average pooling, dense head to class_count, sigmoid.
// All tensors are zero-initialised.
ModelWeights make_classifier(int class_count,
                             std::vector<std::string> labels = {});

enum class InitScheme {
  // Truncated normal (|x| <= 2 sigma), fixed sigma = 0.09 for every kernel.
  FixedStd,
  // Truncated normal with sigma = sqrt(2 / fan_in) per kernel; keeps
  // activation variance alive through the stack, which a fixed sigma does
  // not for 13 blocks of inference-mode batch norm.
  FanIn,
};

// Randomises conv/depthwise/dense kernels in place: truncated normal per
// the scheme, zero biases/beta/means, unit gamma/variance. Deterministic
// under seed.
void randomize(ModelWeights& m, std::uint64_t seed,
               InitScheme scheme = InitScheme::FixedStd,
               float fixed_std = 0.09f);

}  // namespace auris::nn
