// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include "auris/common/error.hpp"
#include "auris/data/manifest.hpp"
#include "auris/nn/mobilenet.hpp"
#include "auris/nn/weights_io.hpp"
#include "auris/train/trainer.hpp"
#include "common.hpp"

namespace auris::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

struct TrainArgs {
  std::string dataset;
  std::string out;
  std::string backbone;
  std::int64_t random_backbone_seed = -1;
  std::string backbone_init = "fixed";  // fixed | fan-in
  double learning_rate = 1e-5;
  int max_epochs = 100;
  int batch_size = 32;
  double focal_alpha = 0.25;
  double focal_gamma = 2.0;
  double label_smoothing = 0.1;
  bool no_augment = false;
  std::string head_init = "random";  // random | zero
  std::string save_dtype = "f32";    // f32 | f16
};

void write_history_csv(const train::TrainingHistory& history,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  out << "epoch,lr,train_loss,val_loss,val_map,val_acc\n";
  for (const auto& e : history.epochs) {
    out << e.epoch << ',' << e.learning_rate << ',' << e.train_loss << ','
        << e.val_loss << ',' << e.val_map << ',' << e.val_accuracy << '\n';
  }
}

void run(const TrainArgs& args, const GlobalOptions& global) {
  const std::filesystem::path dataset_root = args.dataset;
  const auto manifest =
      data::load_manifest_json(dataset_root / "manifest.json");
  const auto train_clips =
      clips_for_split(manifest, dataset_root, data::Split::Train);
  const auto val_clips =
      clips_for_split(manifest, dataset_root, data::Split::Validation);

  nn::ModelWeights backbone;
  if (!args.backbone.empty()) {
    backbone = nn::load_weights(args.backbone);
  } else if (args.random_backbone_seed >= 0) {
    backbone = nn::make_classifier(data::kSceneLabelCount,
                                   scene_label_names());
    const auto scheme = args.backbone_init == "fan-in"
                            ? nn::InitScheme::FanIn
                            : nn::InitScheme::FixedStd;
    nn::randomize(backbone,
                  static_cast<std::uint64_t>(args.random_backbone_seed),
                  scheme);
  } else {
    throw CLI::ValidationError(
        "train", "provide --backbone or --random-backbone-seed");
  }
  if (backbone.class_count != data::kSceneLabelCount) {
    throw DatasetError(DatasetErrc::BadLabel,
                       "backbone classifies " +
                           std::to_string(backbone.class_count) +
                           " labels; scene datasets have 14");
  }

  train::TrainConfig cfg;
  cfg.learning_rate = args.learning_rate;
  cfg.max_epochs = args.max_epochs;
  cfg.batch_size = args.batch_size;
  cfg.focal_alpha = args.focal_alpha;
  cfg.focal_gamma = args.focal_gamma;
  cfg.label_smoothing = args.label_smoothing;
  cfg.seed = global.seed;
  cfg.threads = global.threads;
  cfg.head_init = args.head_init == "zero" ? train::HeadInit::Zero
                                           : train::HeadInit::TruncatedNormal;
  if (!args.no_augment) {
    data::AugmentationConfig aug;
    aug.rng_seed = global.seed;
    cfg.augmentation = aug;
  }

  const auto result = train::train_head(train_clips, val_clips, backbone, cfg);

  const std::filesystem::path out_dir = args.out;
  std::filesystem::create_directories(out_dir);
  const auto dtype =
      args.save_dtype == "f16" ? nn::Dtype::F16 : nn::Dtype::F32;
  nn::save_weights(result.best_model, out_dir / "best.weights", dtype);
  nn::save_weights(result.final_model, out_dir / "final.weights", dtype);
  write_history_csv(result.history, out_dir / "history.csv");

  ordered_json resolved;
  resolved["command"] = "train";
  resolved["dataset"] = args.dataset;
  resolved["out"] = args.out;
  resolved["backbone"] = args.backbone;
  resolved["random_backbone_seed"] = args.random_backbone_seed;
  resolved["backbone_init"] = args.backbone_init;
  resolved["learning_rate"] = cfg.learning_rate;
  resolved["max_epochs"] = cfg.max_epochs;
  resolved["plateau_patience_epochs"] = cfg.plateau_patience_epochs;
  resolved["decay_factor"] = cfg.decay_factor;
  resolved["early_stop_patience_epochs"] = cfg.early_stop_patience_epochs;
  resolved["focal_alpha"] = cfg.focal_alpha;
  resolved["focal_gamma"] = cfg.focal_gamma;
  resolved["label_smoothing"] = cfg.label_smoothing;
  resolved["batch_size"] = cfg.batch_size;
  resolved["augment"] = !args.no_augment;
  resolved["head_init"] = args.head_init;
  resolved["head_only"] = cfg.head_only;
  resolved["save_dtype"] = args.save_dtype;
  resolved["seed"] = global.seed;
  resolved["threads"] = global.threads;
  write_resolved_config(out_dir, resolved);

  const auto& best = result.history.epochs.at(result.history.best_epoch - 1);
  std::cerr << "train: " << result.history.epochs.size()
            << " epochs, best epoch " << best.epoch << " (val_loss "
            << best.val_loss << ", val_map " << best.val_map << ", val_acc "
            << best.val_accuracy << ")\n";
}

}  // namespace

void register_train(CLI::App& app, const GlobalOptions& global) {
  auto cmd = app.add_subcommand(
      "train", "Train the classifier head on frozen backbone embeddings");
  auto args = std::make_shared<TrainArgs>();
  cmd->add_option("--dataset", args->dataset,
                  "Dataset directory containing manifest.json")
      ->required();
  cmd->add_option("--out", args->out, "Training run output directory")
      ->required();
  cmd->add_option("--backbone", args->backbone,
                  "Backbone weight file (frozen)");
  cmd->add_option("--random-backbone-seed", args->random_backbone_seed,
                  "Build a randomly initialised backbone from this seed");
  cmd->add_option("--backbone-init", args->backbone_init,
                  "Random backbone initialiser: fixed (sigma 0.09) or fan-in")
      ->check(CLI::IsMember({"fixed", "fan-in"}));
  cmd->add_option("--learning-rate", args->learning_rate, "Adam learning rate")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-epochs", args->max_epochs, "Training epoch cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--batch-size", args->batch_size, "Mini-batch size")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--focal-alpha", args->focal_alpha, "Focal loss alpha")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--focal-gamma", args->focal_gamma, "Focal loss gamma")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--label-smoothing", args->label_smoothing,
                  "Label smoothing factor in [0, 0.5)")
      ->check(CLI::Range(0.0, 0.49999));
  cmd->add_flag("--no-augment", args->no_augment,
                "Disable on-the-fly training augmentation");
  cmd->add_option("--head-init", args->head_init,
                  "Head initialiser: random or zero")
      ->check(CLI::IsMember({"random", "zero"}));
  cmd->add_option("--save-dtype", args->save_dtype,
                  "Weight file precision: f32 or f16")
      ->check(CLI::IsMember({"f32", "f16"}));
  cmd->callback([args, &global] { run(*args, global); });
}

}  // namespace auris::cli
