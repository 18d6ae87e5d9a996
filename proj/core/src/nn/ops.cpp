// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/nn/ops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "auris/common/error.hpp"

namespace auris::nn {
namespace {

struct SamePad {
  int out;
  int before;
};

SamePad same_pad(int in, int k, int stride) {
  const int out = (in + stride - 1) / stride;
  const int total = std::max((out - 1) * stride + k - in, 0);
  return {out, total / 2};
}

}  // namespace

Tensor3 conv2d(const Tensor3& input, std::span<const float> kernel, int kh,
               int kw, int cin, int cout, int stride) {
  if (cin != input.c) {
    throw ShapeError("conv2d: kernel cin " + std::to_string(cin) +
                     " != input channels " + std::to_string(input.c));
  }
  if (kernel.size() != static_cast<std::size_t>(kh) * kw * cin * cout) {
    throw ShapeError("conv2d: kernel element count mismatch");
  }
  const auto [oh, pad_top] = same_pad(input.h, kh, stride);
  const auto [ow, pad_left] = same_pad(input.w, kw, stride);

  Tensor3 out(oh, ow, cout);
  for (int oy = 0; oy < oh; ++oy) {
    const int y0 = oy * stride - pad_top;
    for (int ox = 0; ox < ow; ++ox) {
      const int x0 = ox * stride - pad_left;
      float* acc = &out.at(oy, ox, 0);
      for (int ky = 0; ky < kh; ++ky) {
        const int y = y0 + ky;
        if (y < 0 || y >= input.h) continue;
        for (int kx = 0; kx < kw; ++kx) {
          const int x = x0 + kx;
          if (x < 0 || x >= input.w) continue;
          const float* in_px = &input.v[(static_cast<std::size_t>(y) * input.w + x) * cin];
          const float* k_px = &kernel[((static_cast<std::size_t>(ky) * kw + kx) * cin) * cout];
          for (int ci = 0; ci < cin; ++ci) {
            const float iv = in_px[ci];
            if (iv == 0.0f) continue;
            const float* k_row = k_px + static_cast<std::size_t>(ci) * cout;
            for (int co = 0; co < cout; ++co) {
              acc[co] += iv * k_row[co];
            }
          }
        }
      }
    }
  }
  return out;
}

Tensor3 depthwise_conv2d(const Tensor3& input, std::span<const float> kernel,
                         int kh, int kw, int stride) {
  if (kernel.size() != static_cast<std::size_t>(kh) * kw * input.c) {
    throw ShapeError("depthwise_conv2d: kernel element count mismatch");
  }
  const auto [oh, pad_top] = same_pad(input.h, kh, stride);
  const auto [ow, pad_left] = same_pad(input.w, kw, stride);
  const int c = input.c;

  Tensor3 out(oh, ow, c);
  for (int oy = 0; oy < oh; ++oy) {
    const int y0 = oy * stride - pad_top;
    for (int ox = 0; ox < ow; ++ox) {
      const int x0 = ox * stride - pad_left;
      float* acc = &out.at(oy, ox, 0);
      for (int ky = 0; ky < kh; ++ky) {
        const int y = y0 + ky;
        if (y < 0 || y >= input.h) continue;
        for (int kx = 0; kx < kw; ++kx) {
          const int x = x0 + kx;
          if (x < 0 || x >= input.w) continue;
          const float* in_px = &input.v[(static_cast<std::size_t>(y) * input.w + x) * c];
          const float* k_px = &kernel[(static_cast<std::size_t>(ky) * kw + kx) * c];
          for (int ch = 0; ch < c; ++ch) {
            acc[ch] += in_px[ch] * k_px[ch];
          }
        }
      }
    }
  }
  return out;
}

Tensor3 batch_norm_inference(const Tensor3& input,
                             std::span<const float> gamma,
                             std::span<const float> beta,
                             std::span<const float> moving_mean,
                             std::span<const float> moving_var,
                             float epsilon) {
  const std::size_t c = static_cast<std::size_t>(input.c);
  if (gamma.size() != c || beta.size() != c || moving_mean.size() != c ||
      moving_var.size() != c) {
    throw ShapeError("batch_norm: parameter length != channel count");
  }
  std::vector<float> scale(c), shift(c);
  for (std::size_t i = 0; i < c; ++i) {
    const float inv = 1.0f / std::sqrt(moving_var[i] + epsilon);
    scale[i] = gamma[i] * inv;
    shift[i] = beta[i] - moving_mean[i] * scale[i];
  }
  Tensor3 out(input.h, input.w, input.c);
  const std::size_t pixels = static_cast<std::size_t>(input.h) * input.w;
  for (std::size_t p = 0; p < pixels; ++p) {
    const float* in_px = &input.v[p * c];
    float* out_px = &out.v[p * c];
    for (std::size_t i = 0; i < c; ++i) {
      out_px[i] = in_px[i] * scale[i] + shift[i];
    }
  }
  return out;
}

void relu_inplace(Tensor3& t) {
  for (auto& x : t.v) {
    if (x < 0.0f) x = 0.0f;
  }
}

std::vector<float> global_avg_pool(const Tensor3& t) {
  const std::size_t pixels = static_cast<std::size_t>(t.h) * t.w;
  std::vector<double> acc(t.c, 0.0);
  for (std::size_t p = 0; p < pixels; ++p) {
    const float* px = &t.v[p * t.c];
    for (int ch = 0; ch < t.c; ++ch) acc[ch] += px[ch];
  }
  std::vector<float> out(t.c);
  for (int ch = 0; ch < t.c; ++ch) {
    out[ch] = static_cast<float>(acc[ch] / static_cast<double>(pixels));
  }
  return out;
}

std::vector<float> dense(std::span<const float> input,
                         std::span<const float> weights,
                         std::span<const float> bias, int in_dim,
                         int out_dim) {
  if (input.size() != static_cast<std::size_t>(in_dim) ||
      weights.size() != static_cast<std::size_t>(in_dim) * out_dim ||
      bias.size() != static_cast<std::size_t>(out_dim)) {
    throw ShapeError("dense: shape mismatch");
  }
  std::vector<float> out(bias.begin(), bias.end());
  for (int i = 0; i < in_dim; ++i) {
    const float iv = input[i];
    if (iv == 0.0f) continue;
    const float* w_row = &weights[static_cast<std::size_t>(i) * out_dim];
    for (int o = 0; o < out_dim; ++o) {
      out[o] += iv * w_row[o];
    }
  }
  return out;
}

void sigmoid_inplace(std::span<float> v) {
  for (auto& x : v) {
    x = 1.0f / (1.0f + std::exp(-x));
  }
}

}  // namespace auris::nn
