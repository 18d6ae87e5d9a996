// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/nn/mobilenet.hpp"

#include <cmath>
#include <random>

#include "auris/common/rng.hpp"

namespace auris::nn {

const std::vector<BlockSpec>& mobilenet_blocks() {
  static const std::vector<BlockSpec> blocks = {
      {64, false},  {128, true}, {128, false}, {256, true},  {256, false},
      {512, true},  {512, false}, {512, false}, {512, false}, {512, false},
      {512, false}, {1024, true}, {1024, false},
  };
  return blocks;
}

namespace {

LayerSpec conv_layer(int kh, int kw, int cin, int cout, int stride) {
  LayerSpec l;
  l.kind = LayerKind::Conv;
  l.kh = kh;
  l.kw = kw;
  l.cin = cin;
  l.cout = cout;
  l.stride = stride;
  l.tensors = {std::vector<float>(
      static_cast<std::size_t>(kh) * kw * cin * cout, 0.0f)};
  return l;
}

LayerSpec depthwise_layer(int c, int stride) {
  LayerSpec l;
  l.kind = LayerKind::DepthwiseConv;
  l.kh = 3;
  l.kw = 3;
  l.cin = c;
  l.cout = c;
  l.stride = stride;
  l.tensors = {std::vector<float>(static_cast<std::size_t>(9) * c, 0.0f)};
  return l;
}

LayerSpec batch_norm_layer(int c) {
  LayerSpec l;
  l.kind = LayerKind::BatchNorm;
  l.cin = c;
  l.cout = c;
  l.epsilon = kBatchNormEpsilon;
  l.tensors = {
      std::vector<float>(c, 1.0f),  // gamma
      std::vector<float>(c, 0.0f),  // beta
      std::vector<float>(c, 0.0f),  // moving mean
      std::vector<float>(c, 1.0f),  // moving variance
  };
  return l;
}

LayerSpec plain_layer(LayerKind kind, int c) {
  LayerSpec l;
  l.kind = kind;
  l.cin = c;
  l.cout = c;
  return l;
}

}  // namespace

ModelWeights make_classifier(int class_count,
                             std::vector<std::string> labels) {
  ModelWeights m;
  m.class_count = class_count;
  m.labels = std::move(labels);

  auto add_bn_relu = [&m](int c) {
    m.layers.push_back(batch_norm_layer(c));
    m.layers.push_back(plain_layer(LayerKind::Relu, c));
  };

  m.layers.push_back(conv_layer(3, 3, 1, kStemFilters, 2));
  add_bn_relu(kStemFilters);

  int channels = kStemFilters;
  for (const auto& block : mobilenet_blocks()) {
    m.layers.push_back(depthwise_layer(channels, block.stride2 ? 2 : 1));
    add_bn_relu(channels);
    m.layers.push_back(conv_layer(1, 1, channels, block.out_channels, 1));
    add_bn_relu(block.out_channels);
    channels = block.out_channels;
  }

  m.layers.push_back(plain_layer(LayerKind::GlobalAvgPool, channels));

  LayerSpec head;
  head.kind = LayerKind::Dense;
  head.cin = channels;
  head.cout = class_count;
  head.tensors = {
      std::vector<float>(static_cast<std::size_t>(channels) * class_count,
                         0.0f),
      std::vector<float>(class_count, 0.0f),
  };
  m.layers.push_back(head);
  m.layers.push_back(plain_layer(LayerKind::Sigmoid, class_count));
  return m;
}

void randomize(ModelWeights& m, std::uint64_t seed, InitScheme scheme,
               float fixed_std) {
  auto rng = make_rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto truncated = [&](double sigma) {
    double x;
    do {
      x = normal(rng);
    } while (std::abs(x) > 2.0);
    return static_cast<float>(x * sigma);
  };

  for (auto& layer : m.layers) {
    switch (layer.kind) {
      case LayerKind::Conv:
      case LayerKind::DepthwiseConv: {
        const int fan_in = layer.kind == LayerKind::Conv
                               ? layer.kh * layer.kw * layer.cin
                               : layer.kh * layer.kw;
        const double sigma = scheme == InitScheme::FixedStd
                                 ? fixed_std
                                 : std::sqrt(2.0 / fan_in);
        for (auto& v : layer.tensors.at(0)) v = truncated(sigma);
        break;
      }
      case LayerKind::Dense: {
        const double sigma = scheme == InitScheme::FixedStd
                                 ? fixed_std
                                 : std::sqrt(2.0 / layer.cin);
        for (auto& v : layer.tensors.at(0)) v = truncated(sigma);
        for (auto& v : layer.tensors.at(1)) v = 0.0f;  // bias
        break;
      }
      case LayerKind::BatchNorm:
        for (auto& v : layer.tensors.at(0)) v = 1.0f;  // gamma
        for (auto& v : layer.tensors.at(1)) v = 0.0f;  // beta
        for (auto& v : layer.tensors.at(2)) v = 0.0f;  // mean
        for (auto& v : layer.tensors.at(3)) v = 1.0f;  // variance
        break;
      default:
        break;
    }
  }
}

}  // namespace auris::nn
