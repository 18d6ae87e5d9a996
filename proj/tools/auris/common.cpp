// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "common.hpp"

#include <fstream>

#include "auris/audio/wav.hpp"
#include "auris/common/error.hpp"

namespace auris::cli {

std::vector<std::string> scene_label_names() {
  std::vector<std::string> names;
  names.reserve(data::kSceneLabelCount);
  for (auto label : data::all_scene_labels()) {
    names.emplace_back(data::to_string(label));
  }
  return names;
}

std::vector<data::LabeledClip> clips_for_split(
    const data::DatasetManifest& manifest,
    const std::filesystem::path& dataset_root, data::Split split) {
  std::vector<data::LabeledClip> clips;
  for (const auto& record : manifest.clips) {
    if (record.split != split) continue;
    data::LabeledClip clip;
    clip.clip_id = record.clip_id;
    clip.label = static_cast<int>(record.label);
    const std::filesystem::path path = dataset_root / record.path;
    clip.load = [path] { return audio::read_wav(path); };
    clips.push_back(std::move(clip));
  }
  return clips;
}

void write_resolved_config(const std::filesystem::path& out_dir,
                           const nlohmann::ordered_json& config) {
  std::filesystem::create_directories(out_dir);
  std::ofstream out(out_dir / "config.json", std::ios::trunc);
  if (!out) {
    throw DatasetError(DatasetErrc::BadSourcesFile,
                       "cannot write config.json under " + out_dir.string());
  }
  out << config.dump(2) << "\n";
}

}  // namespace auris::cli
