// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "auris/data/labels.hpp"

namespace auris::data {

enum class Split : int { Train = 0, Validation = 1, Test = 2 };

std::string_view to_string(Split split);
std::optional<Split> split_from_string(std::string_view name);

struct SpeechRef {
  std::string source_id;
  double offset_s = 0.0;
};

struct ClipRecord {
  std::string clip_id;
  std::string path;  // relative to the dataset root
  SceneLabel label = SceneLabel::CocktailParty;
  Split split = Split::Train;
  double duration_s = 10.0;
  std::optional<double> snr_db;          // present iff label is speech_in_*
  std::optional<SpeechRef> speech_source; // present iff label is speech_in_*
  std::optional<std::string> environment_source;  // absent for interfering
};

struct SkippedClip {
  std::string source_id;
  std::string reason;
};

struct DatasetManifest {
  std::vector<ClipRecord> clips;
  double reference_rms = 0.0;
  std::map<std::string, double> per_corpus_rms;
  std::uint64_t seed = 0;
  std::array<double, 3> split_ratios = {0.70, 0.10, 0.20};
  std::vector<SkippedClip> skipped;
  std::uint64_t clipped_samples = 0;  // clamped at PCM write time

  // Throws DatasetError if a record violates the provenance rules or a
  // clip id repeats.
  void validate() const;
};

void save_manifest_json(const DatasetManifest& m,
                        const std::filesystem::path& path);
DatasetManifest load_manifest_json(const std::filesystem::path& path);

// Flat view: clip_id,path,label,split,snr_db (snr empty when absent).
void save_manifest_csv(const DatasetManifest& m,
                       const std::filesystem::path& path);

}  // namespace auris::data
