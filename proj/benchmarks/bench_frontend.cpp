// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "auris/features/frontend.hpp"
#include "support/synth.hpp"

namespace {

using auris::testing::make_noise;

void BM_LogMelWindow(benchmark::State& state) {
  auris::features::LogMelFrontend frontend;
  const auto clip = make_noise(0.96, 0.4, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(frontend.compute(clip.samples));
  }
}
BENCHMARK(BM_LogMelWindow);

void BM_LogMelTenSecondClip(benchmark::State& state) {
  auris::features::LogMelFrontend frontend;
  const auto clip = make_noise(10.0, 0.4, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(frontend.compute_clip(clip));
  }
}
BENCHMARK(BM_LogMelTenSecondClip);

}  // namespace
