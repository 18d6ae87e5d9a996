// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>

#include "auris/audio/waveform.hpp"

namespace auris::audio {

// Reads a RIFF/WAVE file holding mono 16-bit PCM. Samples are dequantised
// to float by dividing by 32768; the sample rate is preserved as read.
// Multichannel, compressed, or float payloads are rejected, each with a
// distinct AudioError code.
Waveform read_wav(const std::filesystem::path& path);

// Writes mono 16-bit PCM. Samples outside [-1, 1] are clamped and counted;
// the return value is the number of clipped samples. Quantisation is
// round-half-away-from-zero of sample*32768, saturating at +32767.
std::size_t write_wav(const Waveform& w, const std::filesystem::path& path);

// Quantiser/dequantiser used by the codec, exposed for tests.
// pcm16_from_float clamps to [-1, 1] first and reports via `clipped`.
std::int16_t pcm16_from_float(float sample, bool* clipped = nullptr);
float pcm16_to_float(std::int16_t word);

}  // namespace auris::audio
