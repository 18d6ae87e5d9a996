// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "auris/common/rng.hpp"
#include "auris/features/frontend.hpp"
#include "auris/nn/mobilenet.hpp"
#include "auris/nn/ops.hpp"
#include "support/synth.hpp"

namespace {

using namespace auris;

features::LogMelPatch bench_patch() {
  features::LogMelPatch p;
  p.frames = 96;
  p.bands = 64;
  p.values.resize(96 * 64);
  auto rng = make_rng(42);
  std::uniform_real_distribution<float> dist(-6.9f, 2.0f);
  for (auto& v : p.values) v = dist(rng);
  return p;
}

void BM_ForwardPatch(benchmark::State& state) {
  auto model = nn::make_classifier(14);
  nn::randomize(model, 1, nn::InitScheme::FanIn);
  const auto patch = bench_patch();
  for (auto _ : state) {
    benchmark::DoNotOptimize(nn::forward_patch(patch, model));
  }
}
BENCHMARK(BM_ForwardPatch);

void BM_InferTenSecondClip(benchmark::State& state) {
  auto model = nn::make_classifier(14);
  nn::randomize(model, 2, nn::InitScheme::FanIn);
  features::LogMelFrontend frontend;
  const auto clip = testing::make_noise(10.0, 0.4, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nn::infer_clip(clip, model, frontend));
  }
}
BENCHMARK(BM_InferTenSecondClip);

void BM_PointwiseConv(benchmark::State& state) {
  const int c = static_cast<int>(state.range(0));
  auto rng = make_rng(5);
  std::uniform_real_distribution<float> dist(-1.0f, 1.0f);
  nn::Tensor3 in(6, 4, c);
  for (auto& v : in.v) v = dist(rng);
  std::vector<float> kernel(static_cast<std::size_t>(c) * c);
  for (auto& v : kernel) v = dist(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nn::conv2d(in, kernel, 1, 1, c, c, 1));
  }
  state.SetItemsProcessed(state.iterations() * 6 * 4 *
                          static_cast<std::int64_t>(c) * c);
}
BENCHMARK(BM_PointwiseConv)->Arg(256)->Arg(512)->Arg(1024);

}  // namespace
