// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/audio/wav.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include "auris/common/error.hpp"

namespace auris::audio {
namespace {

constexpr std::uint16_t kFormatPcm = 1;

template <typename T>
T read_le(std::istream& in) {
  unsigned char buf[sizeof(T)];
  in.read(reinterpret_cast<char*>(buf), sizeof(T));
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    v |= static_cast<T>(buf[i]) << (8 * i);
  }
  return v;
}

template <typename T>
void write_le(std::ostream& out, T v) {
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  }
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

bool read_tag(std::istream& in, char tag[4]) {
  in.read(tag, 4);
  return bool(in);
}

}  // namespace

std::int16_t pcm16_from_float(float sample, bool* clipped) {
  double x = sample;
  if (x > 1.0) {
    x = 1.0;
    if (clipped) *clipped = true;
  } else if (x < -1.0) {
    x = -1.0;
    if (clipped) *clipped = true;
  }
  // Scale 32768 keeps quantise(dequantise(w)) == w for every PCM16 word;
  // +1.0 saturates to 32767 because +32768 is unrepresentable.
  long v = std::lround(x * 32768.0);
  if (v > 32767) v = 32767;
  if (v < -32768) v = -32768;
  return static_cast<std::int16_t>(v);
}

float pcm16_to_float(std::int16_t word) {
  return static_cast<float>(word) / 32768.0f;
}

Waveform read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw AudioError(AudioErrc::FileMissing,
                     "cannot open WAV file: " + path.string());
  }

  char tag[4];
  if (!read_tag(in, tag) || std::memcmp(tag, "RIFF", 4) != 0) {
    throw AudioError(AudioErrc::NotRiff,
                     "not a RIFF container: " + path.string());
  }
  read_le<std::uint32_t>(in);  // overall size, unchecked against the fs
  if (!read_tag(in, tag) || std::memcmp(tag, "WAVE", 4) != 0) {
    throw AudioError(AudioErrc::NotRiff,
                     "RIFF container is not WAVE: " + path.string());
  }

  bool have_fmt = false;
  std::uint16_t channels = 0;
  std::uint16_t bits = 0;
  std::uint32_t rate = 0;
  Waveform w;

  while (true) {
    if (!read_tag(in, tag)) {
      if (have_fmt && !w.samples.empty()) break;
      throw AudioError(AudioErrc::Truncated,
                       "missing fmt/data chunk: " + path.string());
    }
    std::uint32_t chunk_size = read_le<std::uint32_t>(in);
    if (!in) {
      throw AudioError(AudioErrc::Truncated,
                       "truncated chunk header: " + path.string());
    }
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      if (chunk_size < 16) {
        throw AudioError(AudioErrc::BadFormatChunk,
                         "fmt chunk too small: " + path.string());
      }
      std::uint16_t format = read_le<std::uint16_t>(in);
      channels = read_le<std::uint16_t>(in);
      rate = read_le<std::uint32_t>(in);
      read_le<std::uint32_t>(in);  // byte rate
      read_le<std::uint16_t>(in);  // block align
      bits = read_le<std::uint16_t>(in);
      in.ignore(chunk_size - 16);
      if (format != kFormatPcm) {
        throw AudioError(AudioErrc::UnsupportedEncoding,
                         "WAV format code " + std::to_string(format) +
                             " is not integer PCM: " + path.string());
      }
      if (bits != 16) {
        throw AudioError(AudioErrc::BadBitDepth,
                         "WAV bit depth " + std::to_string(bits) +
                             " is not 16: " + path.string());
      }
      if (channels != 1) {
        throw AudioError(AudioErrc::ChannelCount,
                         "WAV has " + std::to_string(channels) +
                             " channels, expected mono: " + path.string());
      }
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) {
        throw AudioError(AudioErrc::BadFormatChunk,
                         "data chunk precedes fmt: " + path.string());
      }
      if (chunk_size % 2 != 0) {
        throw AudioError(AudioErrc::Truncated,
                         "odd data chunk length: " + path.string());
      }
      std::size_t count = chunk_size / 2;
      w.samples.resize(count);
      for (std::size_t i = 0; i < count; ++i) {
        std::int16_t word =
            static_cast<std::int16_t>(read_le<std::uint16_t>(in));
        if (!in) {
          throw AudioError(AudioErrc::Truncated,
                           "data chunk shorter than header: " + path.string());
        }
        w.samples[i] = pcm16_to_float(word);
      }
      w.sample_rate_hz = static_cast<int>(rate);
      return w;
    } else {
      // Skip unknown chunk, padded to even length.
      in.ignore(chunk_size + (chunk_size & 1u));
    }
  }
  return w;
}

std::size_t write_wav(const Waveform& w, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw AudioError(AudioErrc::UnwritablePath,
                     "cannot open for writing: " + path.string());
  }

  const std::uint32_t data_bytes =
      static_cast<std::uint32_t>(w.samples.size() * 2);
  const std::uint32_t rate = static_cast<std::uint32_t>(w.sample_rate_hz);

  out.write("RIFF", 4);
  write_le<std::uint32_t>(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_le<std::uint32_t>(out, 16);
  write_le<std::uint16_t>(out, kFormatPcm);
  write_le<std::uint16_t>(out, 1);  // mono
  write_le<std::uint32_t>(out, rate);
  write_le<std::uint32_t>(out, rate * 2);
  write_le<std::uint16_t>(out, 2);   // block align
  write_le<std::uint16_t>(out, 16);  // bits per sample
  out.write("data", 4);
  write_le<std::uint32_t>(out, data_bytes);

  std::size_t clipped_count = 0;
  for (float s : w.samples) {
    bool clipped = false;
    std::int16_t word = pcm16_from_float(s, &clipped);
    if (clipped) ++clipped_count;
    write_le<std::uint16_t>(out, static_cast<std::uint16_t>(word));
  }
  if (!out) {
    throw AudioError(AudioErrc::UnwritablePath,
                     "write failed: " + path.string());
  }
  return clipped_count;
}

}  // namespace auris::audio
