// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include "auris/audio/wav.hpp"
#include "auris/features/frontend.hpp"
#include "auris/features/patch_io.hpp"
#include "auris/nn/weights_io.hpp"
#include "common.hpp"

namespace auris::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

void run_inspect_model(const std::string& model_path, bool as_json) {
  const auto model = nn::load_weights(model_path);
  const auto params = nn::count_parameters(model);

  if (as_json) {
    ordered_json j;
    j["path"] = model_path;
    j["format_version"] = model.format_version;
    j["dtype"] = model.dtype == nn::Dtype::F16 ? "f16" : "f32";
    j["class_count"] = model.class_count;
    j["labels"] = model.labels;
    j["parameter_count"] = params;
    ordered_json layers = ordered_json::array();
    for (const auto& l : model.layers) {
      std::size_t elements = 0;
      for (const auto& t : l.tensors) elements += t.size();
      layers.push_back({{"kind", nn::layer_kind_name(l.kind)},
                        {"kh", l.kh},
                        {"kw", l.kw},
                        {"cin", l.cin},
                        {"cout", l.cout},
                        {"stride", l.stride},
                        {"parameters", elements}});
    }
    j["layers"] = std::move(layers);
    std::cout << j.dump(2) << "\n";
    return;
  }

  std::cout << "weights:    " << model_path << "\n"
            << "version:    " << model.format_version << "\n"
            << "dtype:      " << (model.dtype == nn::Dtype::F16 ? "f16" : "f32")
            << "\n"
            << "classes:    " << model.class_count << "\n"
            << "parameters: " << params << "\n";
  if (!model.labels.empty()) {
    std::cout << "labels:     ";
    for (std::size_t i = 0; i < model.labels.size(); ++i) {
      std::cout << (i ? ", " : "") << model.labels[i];
    }
    std::cout << "\n";
  }
  std::cout << "\nlayer table:\n";
  for (std::size_t i = 0; i < model.layers.size(); ++i) {
    const auto& l = model.layers[i];
    std::size_t elements = 0;
    for (const auto& t : l.tensors) elements += t.size();
    std::printf("  %3zu  %-16s %dx%d  %4d -> %-4d stride %d  %8zu params\n",
                i, nn::layer_kind_name(l.kind), l.kh, l.kw, l.cin, l.cout,
                l.stride, elements);
  }
}

void run_inspect_features(const std::string& wav_path,
                          const std::string& out_dir, int max_patches) {
  const audio::Waveform clip = audio::read_wav(wav_path);
  features::LogMelFrontend frontend;
  auto patches = frontend.compute_clip(clip);

  const std::filesystem::path out = out_dir;
  std::filesystem::create_directories(out);
  std::ofstream summary(out / "summary.txt", std::ios::trunc);
  summary << "wav: " << wav_path << "\n"
          << "samples: " << clip.size() << " at " << clip.sample_rate_hz
          << " Hz\n"
          << "windows: " << patches.size() << " ("
          << frontend.config().window_samples() << " samples, hop "
          << frontend.config().hop_samples() << ")\n"
          << "patch: " << frontend.config().patch_frames << " x "
          << frontend.config().mel_bands << "\n\n";

  const std::size_t keep =
      max_patches < 0 ? patches.size()
                      : std::min<std::size_t>(max_patches, patches.size());
  for (std::size_t i = 0; i < keep; ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "patch_%03zu.bin", i);
    features::write_patch(patches[i], out / name);

    float lo = patches[i].values[0], hi = lo;
    double sum = 0.0;
    for (float v : patches[i].values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      sum += v;
    }
    summary << name << "  start " << patches[i].source_window_start_s
            << " s  min " << lo << "  max " << hi << "  mean "
            << sum / patches[i].values.size() << "\n";
  }
  std::cerr << "inspect-features: wrote " << keep << " patches to "
            << out.string() << "\n";
}

}  // namespace

void register_inspect(CLI::App& app, const GlobalOptions&) {
  auto model_cmd = app.add_subcommand(
      "inspect-model", "Print a weight file's layer table and metadata");
  auto model_path = std::make_shared<std::string>();
  auto as_json = std::make_shared<bool>(false);
  model_cmd->add_option("--model", *model_path, "Weight file")->required();
  model_cmd->add_flag("--json", *as_json, "Emit JSON instead of text");
  model_cmd->callback(
      [model_path, as_json] { run_inspect_model(*model_path, *as_json); });

  auto feat_cmd = app.add_subcommand(
      "inspect-features",
      "Dump log-mel patches for a clip plus a text summary");
  auto wav = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>(".");
  auto max_patches = std::make_shared<int>(-1);
  feat_cmd->add_option("--wav", *wav, "16 kHz mono PCM16 WAV file")
      ->required();
  feat_cmd->add_option("--out", *out, "Output directory");
  feat_cmd->add_option("--max-patches", *max_patches,
                       "Cap on dumped patches (-1 dumps all)");
  feat_cmd->callback([wav, out, max_patches] {
    run_inspect_features(*wav, *out, *max_patches);
  });
}

}  // namespace auris::cli
