// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Independent reference implementations the tests check the real code
// against. Everything here is deliberately naive and kept free of the
// production code paths it verifies.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "auris/nn/tensor.hpp"

namespace auris::testing {

// ---- DSP oracles ----

inline double rms_oracle(const std::vector<float>& samples) {
  long double acc = 0.0L;
  for (float s : samples) acc += static_cast<long double>(s) * s;
  return static_cast<double>(
      std::sqrt(static_cast<double>(acc / samples.size())));
}

inline double pooled_rms_by_concat(
    const std::vector<std::vector<float>>& clips) {
  std::vector<float> all;
  for (const auto& c : clips) all.insert(all.end(), c.begin(), c.end());
  return rms_oracle(all);
}

// ---- Convolution oracles (plain 6-loop forms, TF-style same padding) ----

inline auris::nn::Tensor3 naive_conv2d(const auris::nn::Tensor3& in,
                                       const std::vector<float>& kernel,
                                       int kh, int kw, int cin, int cout,
                                       int stride) {
  const int oh = (in.h + stride - 1) / stride;
  const int ow = (in.w + stride - 1) / stride;
  const int pad_h = std::max((oh - 1) * stride + kh - in.h, 0) / 2;
  const int pad_w = std::max((ow - 1) * stride + kw - in.w, 0) / 2;
  auris::nn::Tensor3 out(oh, ow, cout);
  for (int oy = 0; oy < oh; ++oy) {
    for (int ox = 0; ox < ow; ++ox) {
      for (int co = 0; co < cout; ++co) {
        double acc = 0.0;
        for (int ky = 0; ky < kh; ++ky) {
          for (int kx = 0; kx < kw; ++kx) {
            for (int ci = 0; ci < cin; ++ci) {
              const int y = oy * stride - pad_h + ky;
              const int x = ox * stride - pad_w + kx;
              if (y < 0 || y >= in.h || x < 0 || x >= in.w) continue;
              acc += static_cast<double>(in.at(y, x, ci)) *
                     kernel[((static_cast<std::size_t>(ky) * kw + kx) * cin +
                             ci) * cout + co];
            }
          }
        }
        out.at(oy, ox, co) = static_cast<float>(acc);
      }
    }
  }
  return out;
}

inline auris::nn::Tensor3 naive_depthwise2d(const auris::nn::Tensor3& in,
                                            const std::vector<float>& kernel,
                                            int kh, int kw, int stride) {
  const int oh = (in.h + stride - 1) / stride;
  const int ow = (in.w + stride - 1) / stride;
  const int pad_h = std::max((oh - 1) * stride + kh - in.h, 0) / 2;
  const int pad_w = std::max((ow - 1) * stride + kw - in.w, 0) / 2;
  auris::nn::Tensor3 out(oh, ow, in.c);
  for (int oy = 0; oy < oh; ++oy) {
    for (int ox = 0; ox < ow; ++ox) {
      for (int c = 0; c < in.c; ++c) {
        double acc = 0.0;
        for (int ky = 0; ky < kh; ++ky) {
          for (int kx = 0; kx < kw; ++kx) {
            const int y = oy * stride - pad_h + ky;
            const int x = ox * stride - pad_w + kx;
            if (y < 0 || y >= in.h || x < 0 || x >= in.w) continue;
            acc += static_cast<double>(in.at(y, x, c)) *
                   kernel[(static_cast<std::size_t>(ky) * kw + kx) * in.c + c];
          }
        }
        out.at(oy, ox, c) = static_cast<float>(acc);
      }
    }
  }
  return out;
}

inline auris::nn::Tensor3 naive_batch_norm(
    const auris::nn::Tensor3& in, const std::vector<float>& gamma,
    const std::vector<float>& beta, const std::vector<float>& mean,
    const std::vector<float>& var, float eps) {
  auris::nn::Tensor3 out(in.h, in.w, in.c);
  for (int y = 0; y < in.h; ++y) {
    for (int x = 0; x < in.w; ++x) {
      for (int c = 0; c < in.c; ++c) {
        out.at(y, x, c) = static_cast<float>(
            gamma[c] * (in.at(y, x, c) - mean[c]) /
                std::sqrt(static_cast<double>(var[c]) + eps) +
            beta[c]);
      }
    }
  }
  return out;
}

inline std::vector<float> naive_dense(const std::vector<float>& in,
                                      const std::vector<float>& weights,
                                      const std::vector<float>& bias,
                                      int in_dim, int out_dim) {
  std::vector<float> out(out_dim);
  for (int o = 0; o < out_dim; ++o) {
    double acc = bias[o];
    for (int i = 0; i < in_dim; ++i) {
      acc += static_cast<double>(in[i]) *
             weights[static_cast<std::size_t>(i) * out_dim + o];
    }
    out[o] = static_cast<float>(acc);
  }
  return out;
}

// ---- Metric oracles (straight tallies per threshold) ----

inline double precision_oracle(const std::vector<std::vector<float>>& scores,
                               const std::vector<int>& truth, int label,
                               double threshold) {
  std::int64_t tp = 0, fp = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i][label] >= threshold && scores[i][label] > 0.0f) {
      if (truth[i] == label) ++tp;
      else ++fp;
    }
  }
  if (tp + fp == 0) return 1.0;
  return static_cast<double>(tp) / static_cast<double>(tp + fp);
}

inline double recall_oracle(const std::vector<std::vector<float>>& scores,
                            const std::vector<int>& truth, int label,
                            double threshold) {
  std::int64_t tp = 0, fn = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (truth[i] != label) continue;
    if (scores[i][label] >= threshold && scores[i][label] > 0.0f) ++tp;
    else ++fn;
  }
  if (tp + fn == 0) return 1.0;
  return static_cast<double>(tp) / static_cast<double>(tp + fn);
}

inline double map_oracle(const std::vector<std::vector<float>>& scores,
                         const std::vector<int>& truth, int class_count) {
  double sum = 0.0;
  int counted = 0;
  for (int label = 0; label < class_count; ++label) {
    bool present = false;
    for (int t : truth) present = present || (t == label);
    if (!present) continue;
    double ap = 0.0;
    for (int k = 0; k <= 10; ++k) {
      ap += precision_oracle(scores, truth, label, 0.1 * k);
    }
    sum += ap / 11.0;
    ++counted;
  }
  return sum / counted;
}

inline std::vector<std::vector<std::int64_t>> confusion_oracle(
    const std::vector<std::vector<float>>& scores,
    const std::vector<int>& truth, int class_count) {
  std::vector<std::vector<std::int64_t>> m(
      class_count, std::vector<std::int64_t>(class_count, 0));
  for (std::size_t i = 0; i < scores.size(); ++i) {
    int best = 0;
    for (int c = 1; c < class_count; ++c) {
      if (scores[i][c] > scores[i][best]) best = c;
    }
    ++m[truth[i]][best];
  }
  return m;
}

// ---- Architecture parameter-count oracle (spreadsheet form) ----
// Stem 3x3x1x32 conv + BN; 13 blocks of depthwise 3x3 (+BN) and pointwise
// cin x cout (+BN); BN holds 4 per-channel vectors; head is 1024*C + C.

inline std::int64_t parameter_count_oracle(int class_count) {
  const int widths[] = {64,  128, 128, 256, 256,  512, 512,
                        512, 512, 512, 512, 1024, 1024};
  std::int64_t total = 3LL * 3 * 1 * 32 + 4 * 32;
  int cin = 32;
  for (int cout : widths) {
    total += 9LL * cin + 4LL * cin;        // depthwise kernel + its BN
    total += 1LL * cin * cout + 4LL * cout; // pointwise kernel + its BN
    cin = cout;
  }
  total += 1024LL * class_count + class_count;
  return total;
}

}  // namespace auris::testing
