// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include "auris/audio/dsp.hpp"
#include "auris/audio/wav.hpp"
#include "auris/features/frontend.hpp"
#include "auris/nn/weights_io.hpp"
#include "common.hpp"

namespace auris::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

struct InferArgs {
  std::string model;
  std::string wav;
  std::string format = "json";     // json | csv
  std::string aggregate = "none";  // none | softmax
  double gain_db = 0.0;
};

std::vector<std::string> labels_of(const nn::ModelWeights& model) {
  if (!model.labels.empty()) return model.labels;
  std::vector<std::string> names;
  for (int i = 0; i < model.class_count; ++i) {
    names.push_back("label_" + std::to_string(i));
  }
  return names;
}

// Clip-level summary: per-label window-score sums through a softmax.
std::vector<double> softmax_aggregate(
    const std::vector<nn::ScoreVector>& windows, int class_count) {
  std::vector<double> sums(class_count, 0.0);
  for (const auto& sv : windows) {
    for (int c = 0; c < class_count; ++c) sums[c] += sv.scores[c];
  }
  double max_sum = sums[0];
  for (double s : sums) max_sum = std::max(max_sum, s);
  double norm = 0.0;
  std::vector<double> out(class_count);
  for (int c = 0; c < class_count; ++c) {
    out[c] = std::exp(sums[c] - max_sum);
    norm += out[c];
  }
  for (auto& v : out) v /= norm;
  return out;
}

void run(const InferArgs& args) {
  const auto model = nn::load_weights(args.model);
  audio::Waveform clip = audio::read_wav(args.wav);
  if (args.gain_db != 0.0) clip = audio::apply_gain(clip, args.gain_db);

  features::LogMelFrontend frontend;
  const auto windows = nn::infer_clip(clip, model, frontend);
  const auto labels = labels_of(model);

  if (args.format == "csv") {
    std::cout << "window";
    for (const auto& name : labels) std::cout << ',' << name;
    std::cout << '\n';
    for (const auto& sv : windows) {
      std::cout << sv.window_index;
      for (float s : sv.scores) std::cout << ',' << s;
      std::cout << '\n';
    }
    if (args.aggregate == "softmax") {
      std::cout << "softmax";
      for (double v : softmax_aggregate(windows, model.class_count)) {
        std::cout << ',' << v;
      }
      std::cout << '\n';
    }
    return;
  }

  ordered_json j;
  j["model"] = args.model;
  j["wav"] = args.wav;
  j["gain_db"] = args.gain_db;
  j["labels"] = labels;
  ordered_json rows = ordered_json::array();
  for (const auto& sv : windows) {
    rows.push_back({{"window", sv.window_index}, {"scores", sv.scores}});
  }
  j["windows"] = std::move(rows);
  if (args.aggregate == "softmax") {
    j["softmax"] = softmax_aggregate(windows, model.class_count);
  }
  std::cout << j.dump(2) << "\n";
}

}  // namespace

void register_infer(CLI::App& app, const GlobalOptions&) {
  auto cmd = app.add_subcommand(
      "infer", "Score one WAV clip window by window");
  auto args = std::make_shared<InferArgs>();
  cmd->add_option("--model", args->model, "Weight file")->required();
  cmd->add_option("--wav", args->wav, "16 kHz mono PCM16 WAV file")
      ->required();
  cmd->add_option("--format", args->format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--gain-db", args->gain_db,
                  "Gain applied to the clip before inference");
  cmd->add_option("--aggregate", args->aggregate,
                  "Clip-level summary: none, or softmax over summed window "
                  "scores")
      ->check(CLI::IsMember({"none", "softmax"}));
  cmd->callback([args] { run(*args); });
}

}  // namespace auris::cli
