// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "auris/audio/waveform.hpp"

namespace auris::audio {

// Time-stretches a clip by `factor` in [0.5, 2.0] via a whole-clip DFT:
// the spectrum is truncated (factor < 1) or zero-padded (factor > 1) and
// inverted at the new length round(len * factor). The sample rate field is
// unchanged, so the clip plays factor times as long and pitch shifts by
// 1/factor. Amplitude is scaled so a constant signal is preserved.
Waveform fourier_resample(const Waveform& w, double factor);

}  // namespace auris::audio
