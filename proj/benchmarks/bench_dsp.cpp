// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "auris/audio/dsp.hpp"
#include "auris/audio/resample.hpp"
#include "support/synth.hpp"

namespace {

using auris::testing::make_noise;

void BM_Rms(benchmark::State& state) {
  const auto clip = make_noise(10.0, 0.3, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(auris::audio::rms(clip));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(clip.size()));
}
BENCHMARK(BM_Rms);

void BM_MixAtSnr(benchmark::State& state) {
  const auto signal = make_noise(10.0, 0.3, 2);
  const auto noise = make_noise(10.0, 0.1, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(auris::audio::mix_at_snr(signal, noise, -5.0));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(signal.size()));
}
BENCHMARK(BM_MixAtSnr);

void BM_FourierResample(benchmark::State& state) {
  const auto clip = make_noise(10.0, 0.3, 4);
  const double factor = state.range(0) / 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(auris::audio::fourier_resample(clip, factor));
  }
}
BENCHMARK(BM_FourierResample)->Arg(90)->Arg(110);

}  // namespace
