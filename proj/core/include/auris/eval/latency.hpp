// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <vector>

#include "auris/eval/metrics.hpp"
#include "auris/nn/model.hpp"

namespace auris::eval {

struct DurationTiming {
  double seconds = 0.0;
  std::vector<double> runs_ms;
  double mean_ms = 0.0;
};

struct LatencyReport {
  std::vector<DurationTiming> durations;
  LinearFit fit;            // mean ms versus audio seconds
  double model_load_ms = 0.0;  // measured separately, outside the timed span
  int repeats = 0;
};

// Times whole-pipeline inference (log-mel included) on generated audio of
// the given durations: the clock starts with the audio already buffered in
// memory and stops when the scores are readable. Model load is timed once,
// separately. Runs single-threaded; durations must be positive and
// strictly increasing.
LatencyReport latency_benchmark(const std::filesystem::path& weights_path,
                                const std::vector<double>& durations_s,
                                int repeats);

// Same protocol with injectable inference, for tests that fake the model.
LatencyReport latency_benchmark_with(
    const std::vector<double>& durations_s, int repeats,
    const std::function<void(const audio::Waveform&)>& process,
    double model_load_ms);

}  // namespace auris::eval
