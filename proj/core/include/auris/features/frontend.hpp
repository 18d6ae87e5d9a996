// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "auris/audio/waveform.hpp"
#include "auris/dsp/fft.hpp"

namespace auris::features {

// Fixed-size log-mel frontend: 960 ms windows hopped by 480 ms, each
// rendered as a 96-frame x 64-band patch.
struct FrontendConfig {
  int window_ms = 960;
  int hop_ms = 480;
  int stft_window_samples = 400;  // 25 ms at 16 kHz
  int stft_hop_samples = 160;     // 10 ms
  int fft_size = 512;
  int mel_bands = 64;
  double mel_low_hz = 125.0;
  double mel_high_hz = 7500.0;
  double log_offset = 0.001;
  int patch_frames = 96;
  int sample_rate_hz = audio::kCanonicalSampleRateHz;

  int window_samples() const { return sample_rate_hz / 1000 * window_ms; }
  int hop_samples() const { return sample_rate_hz / 1000 * hop_ms; }
  int spectrum_bins() const { return fft_size / 2 + 1; }

  // Throws std::invalid_argument on degenerate band edges or framing that
  // cannot yield patch_frames frames.
  void validate() const;
};

struct LogMelPatch {
  int frames = 0;
  int bands = 0;
  std::vector<float> values;  // frame-major
  double source_window_start_s = 0.0;

  float at(int frame, int band) const { return values[frame * bands + band]; }
  float& at(int frame, int band) { return values[frame * bands + band]; }
};

// HTK mel scale.
double hz_to_mel(double hz);
double mel_to_hz(double mel);

// Triangular mel filterbank over the one-sided magnitude spectrum. Filters
// are stored sparsely (first contributing bin + weights).
class MelFilterbank {
 public:
  explicit MelFilterbank(const FrontendConfig& cfg);

  int bands() const { return static_cast<int>(filters_.size()); }
  int bins() const { return bins_; }
  double center_hz(int band) const { return centers_hz_[band]; }

  // Dense bins x bands matrix view, row-major, for tests and inspection.
  std::vector<double> to_dense() const;

  // mel_out must hold bands() values; spectrum holds bins() magnitudes.
  void apply(std::span<const double> spectrum, double* mel_out) const;

 private:
  struct Filter {
    int first_bin = 0;
    std::vector<double> weights;
  };
  int bins_ = 0;
  std::vector<Filter> filters_;
  std::vector<double> centers_hz_;
};

// Splits a 16 kHz clip into fixed windows of window_samples() hopped by
// hop_samples(); the final window is zero-padded on the right. A clip
// shorter than one window yields a single padded window.
// Window count = max(1, ceil((len - window + hop) / hop)).
std::vector<std::vector<float>> frame_windows(const audio::Waveform& w,
                                              const FrontendConfig& cfg);

std::size_t window_count(std::size_t samples, const FrontendConfig& cfg);

// Computes log-mel patches. Holds the FFT plan, Hann table and filterbank;
// one instance per thread.
class LogMelFrontend {
 public:
  explicit LogMelFrontend(const FrontendConfig& cfg = {});

  const FrontendConfig& config() const { return cfg_; }
  const MelFilterbank& filterbank() const { return filterbank_; }

  // window must be exactly window_samples() long.
  LogMelPatch compute(std::span<const float> window,
                      double window_start_s = 0.0);

  // Convenience: frame_windows + compute per window.
  std::vector<LogMelPatch> compute_clip(const audio::Waveform& w);

 private:
  FrontendConfig cfg_;
  MelFilterbank filterbank_;
  dsp::RealFft fft_;
  std::vector<double> hann_;
  std::vector<double> frame_buf_;
  std::vector<std::complex<double>> spectrum_;
  std::vector<double> magnitude_;
};

}  // namespace auris::features
