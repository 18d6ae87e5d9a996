// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "auris/audio/dsp.hpp"
#include "auris/audio/resample.hpp"
#include "auris/audio/wav.hpp"
#include "auris/common/error.hpp"
#include "auris/common/rng.hpp"
#include "auris/dsp/fft.hpp"
#include "support/oracles.hpp"
#include "support/synth.hpp"

using namespace auris;
using namespace auris::testing;

namespace {

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "auris_audio_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::vector<char> file_bytes(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::vector<char>((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("pcm16 quantiser identities") {
  CHECK(audio::pcm16_to_float(0) == 0.0f);
  CHECK(audio::pcm16_to_float(16384) == 0.5f);
  CHECK(audio::pcm16_to_float(-32768) == -1.0f);

  bool clipped = false;
  CHECK(audio::pcm16_from_float(1.0f, &clipped) == 32767);
  CHECK_FALSE(clipped);
  CHECK(audio::pcm16_from_float(0.0f) == 0);
  CHECK(audio::pcm16_from_float(0.5f) == 16384);
  CHECK(audio::pcm16_from_float(-1.0f) == -32768);
  CHECK(audio::pcm16_from_float(1.2f, &clipped) == 32767);
  CHECK(clipped);

  // quantise(dequantise(w)) == w for every PCM16 word.
  for (int w = -32768; w <= 32767; ++w) {
    const auto word = static_cast<std::int16_t>(w);
    CHECK(audio::pcm16_from_float(audio::pcm16_to_float(word)) == word);
  }
}

TEST_CASE("wav codec round trip is bit exact") {
  const auto dir = temp_dir();
  const auto a = dir / "a.wav";
  const auto b = dir / "b.wav";

  audio::Waveform w = make_noise(0.37, 0.9, 42);
  CHECK(audio::write_wav(w, a) == 0);
  const audio::Waveform r1 = audio::read_wav(a);
  CHECK(r1.sample_rate_hz == 16000);
  CHECK(r1.size() == w.size());
  audio::write_wav(r1, b);
  CHECK(file_bytes(a) == file_bytes(b));
}

TEST_CASE("wav reader rejects bad containers with distinct errors") {
  const auto dir = temp_dir();

  CHECK_THROWS_AS(audio::read_wav(dir / "definitely_missing.wav"),
                  AudioError);
  try {
    audio::read_wav(dir / "definitely_missing.wav");
  } catch (const AudioError& e) {
    CHECK(e.code() == AudioErrc::FileMissing);
  }

  const auto garbage = dir / "garbage.wav";
  std::ofstream(garbage, std::ios::binary) << "not a riff container at all";
  try {
    audio::read_wav(garbage);
    FAIL("expected NotRiff");
  } catch (const AudioError& e) {
    CHECK(e.code() == AudioErrc::NotRiff);
  }

  // Hand-built WAV variants: stereo, float-encoded, 8-bit.
  auto write_wav_header = [&](const std::filesystem::path& p,
                              std::uint16_t format, std::uint16_t channels,
                              std::uint16_t bits) {
    std::ofstream out(p, std::ios::binary);
    auto u16 = [&](std::uint16_t v) { out.write(reinterpret_cast<char*>(&v), 2); };
    auto u32 = [&](std::uint32_t v) { out.write(reinterpret_cast<char*>(&v), 4); };
    out.write("RIFF", 4);
    u32(36 + 4);
    out.write("WAVE", 4);
    out.write("fmt ", 4);
    u32(16);
    u16(format);
    u16(channels);
    u32(16000);
    u32(16000u * channels * bits / 8);
    u16(static_cast<std::uint16_t>(channels * bits / 8));
    u16(bits);
    out.write("data", 4);
    u32(4);
    u32(0);
  };

  const auto stereo = dir / "stereo.wav";
  write_wav_header(stereo, 1, 2, 16);
  try {
    audio::read_wav(stereo);
    FAIL("expected ChannelCount");
  } catch (const AudioError& e) {
    CHECK(e.code() == AudioErrc::ChannelCount);
  }

  const auto floaty = dir / "float.wav";
  write_wav_header(floaty, 3, 1, 32);
  try {
    audio::read_wav(floaty);
    FAIL("expected UnsupportedEncoding");
  } catch (const AudioError& e) {
    CHECK(e.code() == AudioErrc::UnsupportedEncoding);
  }

  const auto eightbit = dir / "eightbit.wav";
  write_wav_header(eightbit, 1, 1, 8);
  try {
    audio::read_wav(eightbit);
    FAIL("expected BadBitDepth");
  } catch (const AudioError& e) {
    CHECK(e.code() == AudioErrc::BadBitDepth);
  }
}

TEST_CASE("rms closed forms") {
  CHECK(audio::rms(make_constant(0.5f, 1000)) == doctest::Approx(0.5));
  CHECK(audio::rms(make_constant(0.0f, 100)) == 0.0);
  // Full-scale sine over an integer number of periods.
  const auto sine = make_tone(1000.0, 1.0, 1.0);
  CHECK(audio::rms(sine) == doctest::Approx(0.70711).epsilon(1e-4));
  CHECK_THROWS_AS(audio::rms(audio::Waveform{}), AudioError);

  // Scale equivariance.
  const auto w = make_noise(0.25, 0.7, 7);
  const double base = audio::rms(w);
  for (double c : {0.1, -0.5, 2.0, 7.25}) {
    auto scaled = w;
    for (auto& s : scaled.samples) s = static_cast<float>(s * c);
    CHECK(audio::rms(scaled) ==
          doctest::Approx(std::abs(c) * base).epsilon(1e-9));
  }
}

TEST_CASE("apply_gain") {
  const auto w = make_noise(0.2, 0.4, 3);

  SUBCASE("zero dB is the identity") {
    const auto same = audio::apply_gain(w, 0.0);
    CHECK(same.samples == w.samples);
  }
  SUBCASE("+6.0206 dB doubles") {
    const auto twice = audio::apply_gain(w, 6.0206);
    for (std::size_t i = 0; i < w.size(); ++i) {
      CHECK(twice.samples[i] ==
            doctest::Approx(2.0f * w.samples[i]).epsilon(1e-6));
    }
  }
  SUBCASE("rms follows the gain formula") {
    const double base = audio::rms(w);
    for (int g = -20; g <= 20; g += 5) {
      const double expected = base * std::pow(10.0, g / 20.0);
      CHECK(audio::rms(audio::apply_gain(w, g)) ==
            doctest::Approx(expected).epsilon(1e-6));
    }
  }
  SUBCASE("gain then inverse gain restores rms") {
    for (double g : {-11.5, -3.0, 4.25, 19.0}) {
      const auto back = audio::apply_gain(audio::apply_gain(w, g), -g);
      CHECK(audio::rms(back) == doctest::Approx(audio::rms(w)).epsilon(1e-6));
    }
  }
}

TEST_CASE("mix_at_snr semantics") {
  SUBCASE("equal rms at 0 dB adds the inputs untouched") {
    // b has the same squares as a in the same order, so the RMS values
    // are bit-identical and no boost happens.
    const auto a = make_noise(0.1, 0.6, 9);
    auto b = a;
    for (std::size_t i = 1; i < b.samples.size(); i += 2) {
      b.samples[i] = -b.samples[i];
    }
    const auto mixed = audio::mix_at_snr(a, b, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(mixed.samples[i] == a.samples[i] + b.samples[i]);
    }
  }

  SUBCASE("quieter signal is boosted to the louder rms first") {
    const auto sig = make_constant(0.1f, 4000);
    const auto noise = make_constant(0.4f, 4000);
    const auto mixed = audio::mix_at_snr(sig, noise, 0.0);
    // Signal boosted x4, then summed with the untouched noise.
    for (float s : mixed.samples) {
      CHECK(s == doctest::Approx(0.8f).epsilon(1e-6));
    }
  }

  SUBCASE("requested snr holds within 0.01 dB") {
    auto rng = make_rng(11);
    std::uniform_real_distribution<double> amp(0.05, 0.8);
    for (int pair = 0; pair < 20; ++pair) {
      const auto sig = make_noise(0.5, amp(rng), 100 + pair);
      const auto noise = make_noise(0.5, amp(rng), 200 + pair);
      for (double snr : {-10.0, -5.0, 0.0, 5.0, 10.0}) {
        // Oracle: rebuild the scaled components from first principles.
        const double rs = rms_oracle(sig.samples);
        const double rn = rms_oracle(noise.samples);
        double s_scale = rs < rn ? rn / rs : 1.0;
        double n_scale = rn < rs ? rs / rn : 1.0;
        s_scale *= std::pow(10.0, snr / 20.0);
        std::vector<float> sig_c(sig.samples), noise_c(noise.samples);
        for (auto& v : sig_c) v = static_cast<float>(v * s_scale);
        for (auto& v : noise_c) v = static_cast<float>(v * n_scale);
        const double measured =
            20.0 * std::log10(rms_oracle(sig_c) / rms_oracle(noise_c));
        CHECK(std::abs(measured - snr) < 0.01);

        // And the mixed output equals the component sum.
        const auto mixed = audio::mix_at_snr(sig, noise, snr);
        for (std::size_t i = 0; i < mixed.size(); i += 997) {
          CHECK(mixed.samples[i] ==
                doctest::Approx(sig_c[i] + noise_c[i]).epsilon(1e-5));
        }
      }
    }
  }

  SUBCASE("digital silence and length mismatches error") {
    const auto loud = make_constant(0.5f, 100);
    const auto silent = make_constant(0.0f, 100);
    CHECK_THROWS_AS(audio::mix_at_snr(loud, silent, 0.0), AudioError);
    CHECK_THROWS_AS(audio::mix_at_snr(silent, loud, 0.0), AudioError);
    const auto longer = make_constant(0.5f, 101);
    CHECK_THROWS_AS(audio::mix_at_snr(loud, longer, 0.0), AudioError);
  }
}

TEST_CASE("fourier_resample") {
  SUBCASE("factor 1.0 is the identity") {
    const auto w = make_noise(0.3, 0.7, 5);
    const auto same = audio::fourier_resample(w, 1.0);
    REQUIRE(same.size() == w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      CHECK(std::abs(same.samples[i] - w.samples[i]) < 1e-5);
    }
  }

  SUBCASE("tone shifts to freq/factor") {
    const auto tone = make_tone(1000.0, 1.0, 0.8);
    const auto stretched = audio::fourier_resample(tone, 1.1);
    REQUIRE(stretched.size() == 17600);

    // Peak-bin oracle on the output spectrum.
    dsp::RealFft fft(stretched.size());
    std::vector<double> in(stretched.size());
    for (std::size_t i = 0; i < stretched.size(); ++i) {
      in[i] = stretched.samples[i];
    }
    std::vector<std::complex<double>> spec(fft.bins());
    fft.forward(in, spec.data());
    std::size_t peak = 1;
    for (std::size_t k = 1; k < spec.size(); ++k) {
      if (std::abs(spec[k]) > std::abs(spec[peak])) peak = k;
    }
    // Input bin 1000 lands at output bin 1000 -> 1000 * 16000 / 17600 Hz.
    CHECK(std::llabs(static_cast<long long>(peak) - 1000) <= 1);
    const double peak_hz = static_cast<double>(peak) * 16000.0 / 17600.0;
    CHECK(peak_hz == doctest::Approx(1000.0 / 1.1).epsilon(0.01));
  }

  SUBCASE("dc is preserved under shrinking") {
    const auto w = make_constant(0.3f, 10000);
    const auto shrunk = audio::fourier_resample(w, 0.9);
    REQUIRE(shrunk.size() == 9000);
    for (float s : shrunk.samples) {
      CHECK(std::abs(s - 0.3f) < 1e-4);
    }
  }

  SUBCASE("length formula exact on a randomized sweep") {
    auto rng = make_rng(77);
    std::uniform_int_distribution<std::size_t> len_dist(1, 4000);
    std::uniform_real_distribution<double> factor_dist(0.5, 2.0);
    for (int i = 0; i < 1000; ++i) {
      const std::size_t n = len_dist(rng);
      const double factor = factor_dist(rng);
      const auto w = make_constant(0.25f, n);
      const auto out = audio::fourier_resample(w, factor);
      CHECK(out.size() == static_cast<std::size_t>(
                              std::llround(static_cast<double>(n) * factor)));
    }
  }

  SUBCASE("factor out of range errors") {
    const auto w = make_constant(0.2f, 100);
    CHECK_THROWS_AS(audio::fourier_resample(w, 0.49), AudioError);
    CHECK_THROWS_AS(audio::fourier_resample(w, 2.01), AudioError);
  }
}
