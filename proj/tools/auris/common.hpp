// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "auris/data/labeled_clip.hpp"
#include "auris/data/manifest.hpp"

namespace auris::cli {

// Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitInternal = 3;

struct GlobalOptions {
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

// Scene label names in index order, for model metadata.
std::vector<std::string> scene_label_names();

// Clips of one split as lazy loaders, labels indexed by SceneLabel order.
std::vector<data::LabeledClip> clips_for_split(
    const data::DatasetManifest& manifest,
    const std::filesystem::path& dataset_root, data::Split split);

// Writes the fully resolved per-run configuration next to the artifacts.
void write_resolved_config(const std::filesystem::path& out_dir,
                           const nlohmann::ordered_json& config);

}  // namespace auris::cli
