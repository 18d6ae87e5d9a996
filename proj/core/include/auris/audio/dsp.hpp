// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "auris/audio/waveform.hpp"

namespace auris::audio {

// RMS below this is treated as digital silence.
inline constexpr double kSilenceRmsFloor = 1e-8;

// Root mean square of the samples. Errors on an empty waveform.
double rms(const Waveform& w);

// Scales every sample by 10^(gain_db/20). A 0 dB gain returns the input
// bit for bit.
Waveform apply_gain(const Waveform& w, double gain_db);

// Mixes speech-style signal over noise at the requested SNR: the quieter
// input is first boosted to the louder input's RMS, then the signal is
// scaled by 10^(snr_db/20) and the two are summed. Output may exceed
// [-1, 1]; clamping happens only at write_wav.
Waveform mix_at_snr(const Waveform& signal, const Waveform& noise,
                    double snr_db);

}  // namespace auris::audio
