// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/audio/dsp.hpp"

#include <cmath>

#include "auris/common/error.hpp"

namespace auris::audio {

double rms(const Waveform& w) {
  if (w.empty()) {
    throw AudioError(AudioErrc::EmptyWaveform, "rms of an empty waveform");
  }
  double sum_sq = 0.0;
  for (float s : w.samples) {
    sum_sq += static_cast<double>(s) * static_cast<double>(s);
  }
  return std::sqrt(sum_sq / static_cast<double>(w.samples.size()));
}

Waveform apply_gain(const Waveform& w, double gain_db) {
  const double scale = std::pow(10.0, gain_db / 20.0);
  Waveform out;
  out.sample_rate_hz = w.sample_rate_hz;
  out.samples.resize(w.samples.size());
  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    out.samples[i] = static_cast<float>(w.samples[i] * scale);
  }
  return out;
}

Waveform mix_at_snr(const Waveform& signal, const Waveform& noise,
                    double snr_db) {
  if (signal.size() != noise.size()) {
    throw AudioError(AudioErrc::LengthMismatch,
                     "mix_at_snr inputs differ in length");
  }
  if (signal.sample_rate_hz != noise.sample_rate_hz) {
    throw AudioError(AudioErrc::SampleRateMismatch,
                     "mix_at_snr inputs differ in sample rate");
  }
  const double rms_signal = rms(signal);
  const double rms_noise = rms(noise);
  if (rms_signal < kSilenceRmsFloor || rms_noise < kSilenceRmsFloor) {
    throw AudioError(AudioErrc::ZeroRms,
                     "mix_at_snr input is digital silence");
  }

  // Boost the quieter component to the louder one's RMS, then set the SNR
  // on the signal side.
  double signal_scale = 1.0;
  double noise_scale = 1.0;
  if (rms_signal < rms_noise) {
    signal_scale = rms_noise / rms_signal;
  } else if (rms_noise < rms_signal) {
    noise_scale = rms_signal / rms_noise;
  }
  signal_scale *= std::pow(10.0, snr_db / 20.0);

  Waveform out;
  out.sample_rate_hz = signal.sample_rate_hz;
  out.samples.resize(signal.size());
  for (std::size_t i = 0; i < signal.size(); ++i) {
    out.samples[i] = static_cast<float>(signal.samples[i] * signal_scale +
                                        noise.samples[i] * noise_scale);
  }
  return out;
}

}  // namespace auris::audio
