// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/audio/resample.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "auris/common/error.hpp"
#include "auris/dsp/fft.hpp"

namespace auris::audio {

Waveform fourier_resample(const Waveform& w, double factor) {
  if (!(factor >= 0.5 && factor <= 2.0)) {
    throw AudioError(AudioErrc::BadResampleFactor,
                     "resample factor outside [0.5, 2.0]");
  }
  if (w.empty()) {
    throw AudioError(AudioErrc::EmptyWaveform, "resample of empty waveform");
  }

  const std::size_t n = w.size();
  const std::size_t m =
      static_cast<std::size_t>(std::llround(static_cast<double>(n) * factor));

  std::vector<double> in(n);
  for (std::size_t i = 0; i < n; ++i) in[i] = w.samples[i];

  dsp::RealFft fwd(n);
  std::vector<std::complex<double>> spectrum(fwd.bins());
  fwd.forward(in, spectrum.data());

  dsp::RealFft inv(m);
  std::vector<std::complex<double>> stretched(inv.bins(),
                                              std::complex<double>(0.0, 0.0));
  const std::size_t copy_bins = std::min(spectrum.size(), stretched.size());
  for (std::size_t k = 0; k < copy_bins; ++k) stretched[k] = spectrum[k];
  // DC and (for even lengths) Nyquist must be real for a real inverse.
  stretched[0] = std::complex<double>(stretched[0].real(), 0.0);
  if (m % 2 == 0 && stretched.size() == m / 2 + 1) {
    auto& nyq = stretched[m / 2];
    nyq = std::complex<double>(nyq.real(), 0.0);
  }

  std::vector<double> out(m);
  inv.inverse(stretched, out.data());

  // 1/n normalisation keeps a constant signal constant.
  const double scale = 1.0 / static_cast<double>(n);
  Waveform result;
  result.sample_rate_hz = w.sample_rate_hz;
  result.samples.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    result.samples[i] = static_cast<float>(out[i] * scale);
  }
  return result;
}

}  // namespace auris::audio
