// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/features/frontend.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "auris/common/error.hpp"

namespace auris::features {

void FrontendConfig::validate() const {
  if (sample_rate_hz <= 0 || window_ms <= 0 || hop_ms <= 0 ||
      stft_window_samples <= 0 || stft_hop_samples <= 0 || fft_size <= 0 ||
      mel_bands <= 0 || patch_frames <= 0) {
    throw std::invalid_argument("frontend config fields must be positive");
  }
  if (!(mel_low_hz < mel_high_hz && mel_high_hz < sample_rate_hz / 2.0)) {
    throw std::invalid_argument("mel band edges must satisfy low < high < fs/2");
  }
  if (stft_window_samples > fft_size) {
    throw std::invalid_argument("STFT window longer than FFT size");
  }
  // The padded window must cover patch_frames STFT frames.
  const int needed =
      (patch_frames - 1) * stft_hop_samples + stft_window_samples;
  const int padded = window_samples() + 2 * stft_hop_samples;
  if (needed > padded) {
    throw std::invalid_argument("patch_frames cannot be framed from one window");
  }
}

double hz_to_mel(double hz) { return 1127.0 * std::log(1.0 + hz / 700.0); }

double mel_to_hz(double mel) { return 700.0 * (std::exp(mel / 1127.0) - 1.0); }

MelFilterbank::MelFilterbank(const FrontendConfig& cfg) {
  cfg.validate();
  bins_ = cfg.spectrum_bins();
  const int bands = cfg.mel_bands;
  const double mel_low = hz_to_mel(cfg.mel_low_hz);
  const double mel_high = hz_to_mel(cfg.mel_high_hz);
  const double bin_hz =
      static_cast<double>(cfg.sample_rate_hz) / cfg.fft_size;

  // bands + 2 uniformly spaced mel edge points; band b spans edges
  // [b, b+1, b+2] as (lower, center, upper).
  std::vector<double> edges_hz(bands + 2);
  for (int i = 0; i < bands + 2; ++i) {
    const double mel = mel_low + (mel_high - mel_low) * i / (bands + 1);
    edges_hz[i] = mel_to_hz(mel);
  }

  filters_.resize(bands);
  centers_hz_.resize(bands);
  for (int b = 0; b < bands; ++b) {
    const double lower = edges_hz[b];
    const double center = edges_hz[b + 1];
    const double upper = edges_hz[b + 2];
    centers_hz_[b] = center;

    int first = -1;
    std::vector<double> weights;
    for (int k = 0; k < bins_; ++k) {
      const double f = k * bin_hz;
      double wgt = 0.0;
      if (f > lower && f < upper) {
        wgt = f <= center ? (f - lower) / (center - lower)
                          : (upper - f) / (upper - center);
      }
      if (wgt > 0.0) {
        if (first < 0) first = k;
        weights.push_back(wgt);
      } else if (first >= 0) {
        break;  // triangles are contiguous in bin index
      }
    }
    if (first < 0) {
      throw std::invalid_argument("mel filter " + std::to_string(b) +
                                  " covers no spectrum bin");
    }
    filters_[b].first_bin = first;
    filters_[b].weights = std::move(weights);
  }
}

std::vector<double> MelFilterbank::to_dense() const {
  std::vector<double> m(static_cast<std::size_t>(bins_) * filters_.size(),
                        0.0);
  for (std::size_t b = 0; b < filters_.size(); ++b) {
    const auto& f = filters_[b];
    for (std::size_t i = 0; i < f.weights.size(); ++i) {
      m[(f.first_bin + i) * filters_.size() + b] = f.weights[i];
    }
  }
  return m;
}

void MelFilterbank::apply(std::span<const double> spectrum,
                          double* mel_out) const {
  assert(static_cast<int>(spectrum.size()) == bins_);
  for (std::size_t b = 0; b < filters_.size(); ++b) {
    const auto& f = filters_[b];
    double acc = 0.0;
    for (std::size_t i = 0; i < f.weights.size(); ++i) {
      acc += f.weights[i] * spectrum[f.first_bin + i];
    }
    mel_out[b] = acc;
  }
}

std::size_t window_count(std::size_t samples, const FrontendConfig& cfg) {
  const std::size_t window = static_cast<std::size_t>(cfg.window_samples());
  const std::size_t hop = static_cast<std::size_t>(cfg.hop_samples());
  if (samples + hop <= window) return 1;
  return (samples + hop - window + hop - 1) / hop;
}

std::vector<std::vector<float>> frame_windows(const audio::Waveform& w,
                                              const FrontendConfig& cfg) {
  if (w.sample_rate_hz != cfg.sample_rate_hz) {
    throw AudioError(AudioErrc::SampleRateMismatch,
                     "frontend requires " +
                         std::to_string(cfg.sample_rate_hz) + " Hz input");
  }
  const std::size_t window = static_cast<std::size_t>(cfg.window_samples());
  const std::size_t hop = static_cast<std::size_t>(cfg.hop_samples());
  const std::size_t count = window_count(w.size(), cfg);

  std::vector<std::vector<float>> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i].assign(window, 0.0f);
    const std::size_t start = i * hop;
    if (start < w.size()) {
      const std::size_t take = std::min(window, w.size() - start);
      std::copy(w.samples.begin() + start, w.samples.begin() + start + take,
                out[i].begin());
    }
  }
  return out;
}

LogMelFrontend::LogMelFrontend(const FrontendConfig& cfg)
    : cfg_(cfg),
      filterbank_(cfg),
      fft_(static_cast<std::size_t>(cfg.fft_size)),
      hann_(cfg.stft_window_samples),
      frame_buf_(cfg.fft_size, 0.0),
      spectrum_(cfg.spectrum_bins()),
      magnitude_(cfg.spectrum_bins()) {
  // Periodic Hann.
  const int n = cfg_.stft_window_samples;
  for (int i = 0; i < n; ++i) {
    hann_[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / n);
  }
}

LogMelPatch LogMelFrontend::compute(std::span<const float> window,
                                    double window_start_s) {
  const int window_samples = cfg_.window_samples();
  if (static_cast<int>(window.size()) != window_samples) {
    throw std::invalid_argument("log-mel window must be exactly " +
                                std::to_string(window_samples) + " samples");
  }
  const int frames = cfg_.patch_frames;
  const int bands = cfg_.mel_bands;
  const int hop = cfg_.stft_hop_samples;
  const int stft_len = cfg_.stft_window_samples;

  LogMelPatch patch;
  patch.frames = frames;
  patch.bands = bands;
  patch.values.resize(static_cast<std::size_t>(frames) * bands);
  patch.source_window_start_s = window_start_s;

  std::vector<double> mel(bands);
  for (int f = 0; f < frames; ++f) {
    const int start = f * hop;
    // Samples beyond the window are the right zero padding.
    for (int i = 0; i < stft_len; ++i) {
      const int idx = start + i;
      const double s = idx < window_samples ? window[idx] : 0.0;
      frame_buf_[i] = s * hann_[i];
    }
    std::fill(frame_buf_.begin() + stft_len, frame_buf_.end(), 0.0);

    fft_.forward(frame_buf_, spectrum_.data());
    for (std::size_t k = 0; k < spectrum_.size(); ++k) {
      magnitude_[k] = std::abs(spectrum_[k]);
    }
    filterbank_.apply(magnitude_, mel.data());
    for (int b = 0; b < bands; ++b) {
      patch.values[static_cast<std::size_t>(f) * bands + b] =
          static_cast<float>(std::log(mel[b] + cfg_.log_offset));
    }
  }
  return patch;
}

std::vector<LogMelPatch> LogMelFrontend::compute_clip(
    const audio::Waveform& w) {
  auto windows = frame_windows(w, cfg_);
  const double hop_s =
      static_cast<double>(cfg_.hop_samples()) / cfg_.sample_rate_hz;
  std::vector<LogMelPatch> out;
  out.reserve(windows.size());
  for (std::size_t i = 0; i < windows.size(); ++i) {
    out.push_back(compute(windows[i], static_cast<double>(i) * hop_s));
  }
  return out;
}

}  // namespace auris::features
