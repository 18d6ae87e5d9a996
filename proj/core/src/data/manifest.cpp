// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/data/manifest.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "auris/common/error.hpp"

namespace auris::data {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string require_string(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw DatasetError(DatasetErrc::BadSourcesFile,
                       std::string("manifest field missing or not a string: ") +
                           key);
  }
  return j[key].get<std::string>();
}

}  // namespace

std::string_view to_string(Split split) {
  switch (split) {
    case Split::Train: return "train";
    case Split::Validation: return "validation";
    case Split::Test: return "test";
  }
  return "train";
}

std::optional<Split> split_from_string(std::string_view name) {
  if (name == "train") return Split::Train;
  if (name == "validation") return Split::Validation;
  if (name == "test") return Split::Test;
  return std::nullopt;
}

void DatasetManifest::validate() const {
  double ratio_sum = split_ratios[0] + split_ratios[1] + split_ratios[2];
  if (std::abs(ratio_sum - 1.0) > 1e-9) {
    throw DatasetError(DatasetErrc::BadSplitRatios,
                       "split ratios must sum to 1");
  }
  std::set<std::string> ids;
  std::set<std::pair<std::string, double>> speech_refs;
  for (const auto& clip : clips) {
    if (!ids.insert(clip.clip_id).second) {
      throw DatasetError(DatasetErrc::BadLabel,
                         "duplicate clip id: " + clip.clip_id);
    }
    const bool speechy = is_speech_in(clip.label);
    if (speechy != clip.snr_db.has_value() ||
        speechy != clip.speech_source.has_value()) {
      throw DatasetError(DatasetErrc::BadLabel,
                         "snr/speech provenance inconsistent for " +
                             clip.clip_id);
    }
    const bool wants_env = clip.label != SceneLabel::InterferingSpeakers;
    if (wants_env != clip.environment_source.has_value()) {
      throw DatasetError(DatasetErrc::BadLabel,
                         "environment provenance inconsistent for " +
                             clip.clip_id);
    }
    if (clip.speech_source) {
      if (!speech_refs
               .insert({clip.speech_source->source_id,
                        clip.speech_source->offset_s})
               .second) {
        throw DatasetError(DatasetErrc::BadLabel,
                           "speech clip reused: " + clip.clip_id);
      }
    }
  }
}

void save_manifest_json(const DatasetManifest& m,
                        const std::filesystem::path& path) {
  ordered_json j;
  j["format"] = "auris-dataset-manifest";
  j["version"] = 1;
  j["seed"] = m.seed;
  j["split_ratios"] = m.split_ratios;
  j["reference_rms"] = m.reference_rms;
  j["per_corpus_rms"] = m.per_corpus_rms;
  j["clipped_samples"] = m.clipped_samples;

  ordered_json clips = ordered_json::array();
  for (const auto& c : m.clips) {
    ordered_json jc;
    jc["clip_id"] = c.clip_id;
    jc["path"] = c.path;
    jc["label"] = std::string(to_string(c.label));
    jc["split"] = std::string(to_string(c.split));
    jc["duration_s"] = c.duration_s;
    if (c.snr_db) jc["snr_db"] = *c.snr_db;
    if (c.speech_source) {
      jc["speech_source"] = {{"source_id", c.speech_source->source_id},
                             {"offset_s", c.speech_source->offset_s}};
    }
    if (c.environment_source) jc["environment_source"] = *c.environment_source;
    clips.push_back(std::move(jc));
  }
  j["clips"] = std::move(clips);

  ordered_json skipped = ordered_json::array();
  for (const auto& s : m.skipped) {
    skipped.push_back({{"source_id", s.source_id}, {"reason", s.reason}});
  }
  j["skipped"] = std::move(skipped);

  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw DatasetError(DatasetErrc::BadSourcesFile,
                       "cannot write manifest: " + path.string());
  }
  out << j.dump(2) << "\n";
}

DatasetManifest load_manifest_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DatasetError(DatasetErrc::BadSourcesFile,
                       "cannot open manifest: " + path.string());
  }
  ordered_json j;
  try {
    in >> j;
  } catch (const ordered_json::parse_error& e) {
    throw DatasetError(DatasetErrc::BadSourcesFile,
                       "manifest is not valid JSON: " + std::string(e.what()));
  }

  DatasetManifest m;
  m.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("split_ratios")) {
    auto r = j["split_ratios"];
    for (int i = 0; i < 3; ++i) m.split_ratios[i] = r.at(i).get<double>();
  }
  m.reference_rms = j.value("reference_rms", 0.0);
  if (j.contains("per_corpus_rms")) {
    for (auto& [k, v] : j["per_corpus_rms"].items()) {
      m.per_corpus_rms[k] = v.get<double>();
    }
  }
  m.clipped_samples = j.value("clipped_samples", std::uint64_t{0});

  for (const auto& jc : j.at("clips")) {
    ClipRecord c;
    c.clip_id = require_string(jc, "clip_id");
    c.path = require_string(jc, "path");
    auto label = scene_label_from_string(require_string(jc, "label"));
    if (!label) {
      throw DatasetError(DatasetErrc::BadLabel,
                         "unknown label in manifest for " + c.clip_id);
    }
    c.label = *label;
    auto split = split_from_string(require_string(jc, "split"));
    if (!split) {
      throw DatasetError(DatasetErrc::BadLabel,
                         "unknown split in manifest for " + c.clip_id);
    }
    c.split = *split;
    c.duration_s = jc.value("duration_s", 10.0);
    if (jc.contains("snr_db")) c.snr_db = jc["snr_db"].get<double>();
    if (jc.contains("speech_source")) {
      SpeechRef ref;
      ref.source_id = jc["speech_source"].at("source_id").get<std::string>();
      ref.offset_s = jc["speech_source"].at("offset_s").get<double>();
      c.speech_source = std::move(ref);
    }
    if (jc.contains("environment_source")) {
      c.environment_source = jc["environment_source"].get<std::string>();
    }
    m.clips.push_back(std::move(c));
  }
  if (j.contains("skipped")) {
    for (const auto& js : j["skipped"]) {
      m.skipped.push_back({js.at("source_id").get<std::string>(),
                           js.at("reason").get<std::string>()});
    }
  }
  m.validate();
  return m;
}

void save_manifest_csv(const DatasetManifest& m,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw DatasetError(DatasetErrc::BadSourcesFile,
                       "cannot write manifest csv: " + path.string());
  }
  out << "clip_id,path,label,split,snr_db\n";
  for (const auto& c : m.clips) {
    out << c.clip_id << ',' << c.path << ',' << to_string(c.label) << ','
        << to_string(c.split) << ',';
    if (c.snr_db) out << *c.snr_db;
    out << '\n';
  }
}

}  // namespace auris::data
