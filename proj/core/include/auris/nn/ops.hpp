// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "auris/nn/tensor.hpp"

namespace auris::nn {

// All convolutions use "same" zero padding in the TensorFlow sense:
// output spatial dims are ceil(in/stride) and the total padding
// max((out-1)*stride + k - in, 0) is split with the smaller half on the
// top/left.

// kernel layout [kh][kw][cin][cout].
Tensor3 conv2d(const Tensor3& input, std::span<const float> kernel, int kh,
               int kw, int cin, int cout, int stride);

// kernel layout [kh][kw][c]; each channel convolved with its own filter.
Tensor3 depthwise_conv2d(const Tensor3& input, std::span<const float> kernel,
                         int kh, int kw, int stride);

// y = gamma * (x - mean) / sqrt(var + eps) + beta, per channel.
Tensor3 batch_norm_inference(const Tensor3& input,
                             std::span<const float> gamma,
                             std::span<const float> beta,
                             std::span<const float> moving_mean,
                             std::span<const float> moving_var, float epsilon);

void relu_inplace(Tensor3& t);

std::vector<float> global_avg_pool(const Tensor3& t);

// weights layout [in][out]; bias length out.
std::vector<float> dense(std::span<const float> input,
                         std::span<const float> weights,
                         std::span<const float> bias, int in_dim, int out_dim);

void sigmoid_inplace(std::span<float> v);

}  // namespace auris::nn
