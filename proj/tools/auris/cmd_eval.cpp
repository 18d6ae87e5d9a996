// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include "auris/common/error.hpp"
#include "auris/data/manifest.hpp"
#include "auris/eval/clip_eval.hpp"
#include "auris/eval/report_io.hpp"
#include "auris/eval/svg.hpp"
#include "auris/nn/weights_io.hpp"
#include "common.hpp"

namespace auris::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

struct EvalArgs {
  std::string model;
  std::string dataset;
  std::string split = "test";
  std::string out = ".";
  bool gain_sweep = false;
};

void run(const EvalArgs& args, const GlobalOptions& global) {
  const auto model = nn::load_weights(args.model);
  const std::filesystem::path dataset_root = args.dataset;
  const auto manifest =
      data::load_manifest_json(dataset_root / "manifest.json");
  const auto split = data::split_from_string(args.split);
  if (!split) {
    throw DatasetError(DatasetErrc::BadLabel,
                       "unknown split: " + args.split);
  }
  const auto clips = clips_for_split(manifest, dataset_root, *split);
  if (clips.empty()) {
    throw DatasetError(DatasetErrc::EmptyCorpus,
                       "split " + args.split + " has no clips");
  }

  auto label_names = model.labels;
  if (label_names.empty() && model.class_count == data::kSceneLabelCount) {
    label_names = scene_label_names();
  }
  const auto report = eval::evaluate_clip_set(clips, model, 0.0,
                                              global.threads, label_names);

  const std::filesystem::path out_dir = args.out;
  std::filesystem::create_directories(out_dir);
  eval::write_report_json(report, out_dir / "report.json");
  eval::write_confusion_csv(report, out_dir / "confusion.csv");
  eval::write_pr_curves_csv(report, out_dir / "pr_curves.csv");
  eval::write_report_svg(report, out_dir / "plots.svg");

  if (args.gain_sweep) {
    const auto sweep =
        eval::gain_sweep_eval(clips, model, eval::default_gain_grid(),
                              global.threads);
    eval::write_gain_sweep_csv(sweep, out_dir / "gain_sweep.csv");
  }

  ordered_json resolved;
  resolved["command"] = "eval";
  resolved["model"] = args.model;
  resolved["dataset"] = args.dataset;
  resolved["split"] = args.split;
  resolved["out"] = args.out;
  resolved["gain_sweep"] = args.gain_sweep;
  resolved["seed"] = global.seed;
  resolved["threads"] = global.threads;
  write_resolved_config(out_dir, resolved);

  std::cerr << "eval: " << report.window_count << " windows, mAP "
            << report.map << ", accuracy " << report.accuracy << "\n";
}

}  // namespace

void register_eval(CLI::App& app, const GlobalOptions& global) {
  auto cmd = app.add_subcommand(
      "eval",
      "Evaluate a model on one dataset split (threshold-averaged mAP, "
      "confusion matrix, accuracy)");
  auto args = std::make_shared<EvalArgs>();
  cmd->add_option("--model", args->model, "Weight file")->required();
  cmd->add_option("--dataset", args->dataset,
                  "Dataset directory containing manifest.json")
      ->required();
  cmd->add_option("--split", args->split, "train, validation or test")
      ->check(CLI::IsMember({"train", "validation", "test"}));
  cmd->add_option("--out", args->out, "Report output directory");
  cmd->add_flag("--gain-sweep", args->gain_sweep,
                "Also evaluate at -20..+20 dB input gain in 5 dB steps");
  cmd->callback([args, &global] { run(*args, global); });
}

}  // namespace auris::cli
