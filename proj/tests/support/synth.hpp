// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "auris/audio/waveform.hpp"
#include "auris/common/rng.hpp"
#include "auris/dsp/fft.hpp"

namespace auris::testing {

inline audio::Waveform make_tone(double freq_hz, double seconds,
                                 double amplitude = 0.5,
                                 int rate = audio::kCanonicalSampleRateHz,
                                 double phase = 0.0) {
  audio::Waveform w;
  w.sample_rate_hz = rate;
  const auto n = static_cast<std::size_t>(std::llround(seconds * rate));
  w.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    w.samples[i] = static_cast<float>(
        amplitude *
        std::sin(2.0 * std::numbers::pi * freq_hz * i / rate + phase));
  }
  return w;
}

inline audio::Waveform make_noise(double seconds, double amplitude,
                                  std::uint64_t seed,
                                  int rate = audio::kCanonicalSampleRateHz) {
  audio::Waveform w;
  w.sample_rate_hz = rate;
  const auto n = static_cast<std::size_t>(std::llround(seconds * rate));
  w.samples.resize(n);
  auto rng = make_rng(seed);
  std::uniform_real_distribution<float> dist(-1.0f, 1.0f);
  for (auto& s : w.samples) s = static_cast<float>(amplitude * dist(rng));
  return w;
}

inline audio::Waveform make_constant(float value, std::size_t n,
                                     int rate = audio::kCanonicalSampleRateHz) {
  audio::Waveform w;
  w.sample_rate_hz = rate;
  w.samples.assign(n, value);
  return w;
}

// White noise band-passed in the DFT domain; distinct bands make cleanly
// separable synthetic classes.
inline audio::Waveform make_band_noise(double seconds, double low_hz,
                                       double high_hz, double amplitude,
                                       std::uint64_t seed,
                                       int rate = audio::kCanonicalSampleRateHz) {
  audio::Waveform w = make_noise(seconds, 1.0, seed, rate);
  const std::size_t n = w.size();
  dsp::RealFft fft(n);
  std::vector<double> in(n);
  for (std::size_t i = 0; i < n; ++i) in[i] = w.samples[i];
  std::vector<std::complex<double>> spectrum(fft.bins());
  fft.forward(in, spectrum.data());
  const double bin_hz = static_cast<double>(rate) / static_cast<double>(n);
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    const double f = k * bin_hz;
    if (f < low_hz || f > high_hz) spectrum[k] = 0.0;
  }
  std::vector<double> out(n);
  fft.inverse(spectrum, out.data());

  double peak = 1e-12;
  for (double v : out) peak = std::max(peak, std::abs(v));
  for (std::size_t i = 0; i < n; ++i) {
    w.samples[i] = static_cast<float>(amplitude * out[i] / peak);
  }
  return w;
}

}  // namespace auris::testing
