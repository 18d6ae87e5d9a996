// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>

#include "auris/audio/waveform.hpp"

namespace auris::data {

// On-the-fly training augmentation: three procedures drawn independently
// at probability_each, applied in fixed order gain -> noise -> stretch.
struct AugmentationConfig {
  double probability_each = 0.5;
  double gain_low_db = -6.0;
  double gain_high_db = 6.0;
  double noise_low = -0.003;
  double noise_high = 0.003;
  double stretch_low = 0.9;
  double stretch_high = 1.1;
  std::uint64_t rng_seed = 0;
};

// The RNG stream derives from (rng_seed, clip_id, epoch), so the result is
// reproducible and independent of scheduling. Draw order is fixed: three
// coin flips, then parameters for the procedures that fired, in order.
audio::Waveform augment_clip(const audio::Waveform& w,
                             const AugmentationConfig& cfg,
                             std::string_view clip_id, std::uint64_t epoch);

}  // namespace auris::data
