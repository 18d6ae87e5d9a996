// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/eval/latency.hpp"

#include <chrono>
#include <random>
#include <stdexcept>

#include "auris/common/rng.hpp"
#include "auris/features/frontend.hpp"
#include "auris/nn/weights_io.hpp"

namespace auris::eval {
namespace {

using Clock = std::chrono::steady_clock;

double ms_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

audio::Waveform make_test_audio(double seconds, std::uint64_t seed) {
  audio::Waveform w;
  w.sample_rate_hz = audio::kCanonicalSampleRateHz;
  const auto n = static_cast<std::size_t>(seconds * w.sample_rate_hz);
  w.samples.resize(n);
  auto rng = make_rng(seed);
  std::uniform_real_distribution<float> dist(-0.5f, 0.5f);
  for (auto& s : w.samples) s = dist(rng);
  return w;
}

void validate(const std::vector<double>& durations_s, int repeats) {
  if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  if (durations_s.empty()) {
    throw std::invalid_argument("need at least one duration");
  }
  double prev = 0.0;
  for (double d : durations_s) {
    if (d <= prev) {
      throw std::invalid_argument(
          "durations must be positive and strictly increasing");
    }
    prev = d;
  }
}

}  // namespace

LatencyReport latency_benchmark_with(
    const std::vector<double>& durations_s, int repeats,
    const std::function<void(const audio::Waveform&)>& process,
    double model_load_ms) {
  validate(durations_s, repeats);

  LatencyReport report;
  report.repeats = repeats;
  report.model_load_ms = model_load_ms;

  std::vector<double> xs, ys;
  for (std::size_t d = 0; d < durations_s.size(); ++d) {
    DurationTiming timing;
    timing.seconds = durations_s[d];
    const audio::Waveform clip = make_test_audio(durations_s[d], d);
    process(clip);  // warm-up pass, untimed
    double total = 0.0;
    for (int r = 0; r < repeats; ++r) {
      const auto start = Clock::now();
      process(clip);
      const auto stop = Clock::now();
      const double ms = ms_between(start, stop);
      timing.runs_ms.push_back(ms);
      total += ms;
    }
    timing.mean_ms = total / repeats;
    xs.push_back(timing.seconds);
    ys.push_back(timing.mean_ms);
    report.durations.push_back(std::move(timing));
  }
  if (xs.size() >= 2) {
    report.fit = linear_fit(xs, ys);
  }
  return report;
}

LatencyReport latency_benchmark(const std::filesystem::path& weights_path,
                                const std::vector<double>& durations_s,
                                int repeats) {
  const auto load_start = Clock::now();
  const nn::ModelWeights model = nn::load_weights(weights_path);
  const double load_ms = ms_between(load_start, Clock::now());

  features::LogMelFrontend frontend;
  auto process = [&](const audio::Waveform& clip) {
    nn::infer_clip(clip, model, frontend);
  };
  return latency_benchmark_with(durations_s, repeats, process, load_ms);
}

}  // namespace auris::eval
