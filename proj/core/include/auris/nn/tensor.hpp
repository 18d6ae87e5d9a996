// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace auris::nn {

// Dense H x W x C activation tensor, HWC layout (channel fastest).
struct Tensor3 {
  int h = 0;
  int w = 0;
  int c = 0;
  std::vector<float> v;

  Tensor3() = default;
  Tensor3(int h_, int w_, int c_)
      : h(h_), w(w_), c(c_),
        v(static_cast<std::size_t>(h_) * w_ * c_, 0.0f) {}

  std::size_t size() const { return v.size(); }
  float at(int y, int x, int ch) const {
    return v[(static_cast<std::size_t>(y) * w + x) * c + ch];
  }
  float& at(int y, int x, int ch) {
    return v[(static_cast<std::size_t>(y) * w + x) * c + ch];
  }
};

}  // namespace auris::nn
