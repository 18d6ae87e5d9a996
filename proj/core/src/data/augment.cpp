// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/data/augment.hpp"

#include <random>
#include <stdexcept>

#include "auris/audio/dsp.hpp"
#include "auris/audio/resample.hpp"
#include "auris/common/rng.hpp"

namespace auris::data {

audio::Waveform augment_clip(const audio::Waveform& w,
                             const AugmentationConfig& cfg,
                             std::string_view clip_id, std::uint64_t epoch) {
  if (!(cfg.probability_each >= 0.0 && cfg.probability_each <= 1.0)) {
    throw std::invalid_argument("augmentation probability outside [0, 1]");
  }
  if (cfg.gain_low_db > cfg.gain_high_db || cfg.noise_low > cfg.noise_high ||
      cfg.stretch_low > cfg.stretch_high) {
    throw std::invalid_argument("augmentation range is inverted");
  }
  auto rng = make_rng(mix_seed(cfg.rng_seed, fnv1a64(clip_id), epoch));
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  const bool do_gain = coin(rng) < cfg.probability_each;
  const bool do_noise = coin(rng) < cfg.probability_each;
  const bool do_stretch = coin(rng) < cfg.probability_each;

  audio::Waveform out = w;
  if (do_gain) {
    std::uniform_real_distribution<double> gain(cfg.gain_low_db,
                                                cfg.gain_high_db);
    out = audio::apply_gain(out, gain(rng));
  }
  if (do_noise) {
    std::uniform_real_distribution<double> noise(cfg.noise_low,
                                                 cfg.noise_high);
    for (auto& s : out.samples) {
      s = static_cast<float>(s + noise(rng));
    }
  }
  if (do_stretch) {
    std::uniform_real_distribution<double> stretch(cfg.stretch_low,
                                                   cfg.stretch_high);
    out = audio::fourier_resample(out, stretch(rng));
  }
  return out;
}

}  // namespace auris::data
