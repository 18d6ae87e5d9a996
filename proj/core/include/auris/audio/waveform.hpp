// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace auris::audio {

inline constexpr int kCanonicalSampleRateHz = 16000;

// Mono audio buffer. Samples are 32-bit floats, nominal range [-1, 1];
// intermediate processing may exceed the range, clamping happens only
// when quantising back to PCM.
struct Waveform {
  std::vector<float> samples;
  int sample_rate_hz = kCanonicalSampleRateHz;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration_s() const {
    return sample_rate_hz > 0
               ? static_cast<double>(samples.size()) / sample_rate_hz
               : 0.0;
  }
};

}  // namespace auris::audio
