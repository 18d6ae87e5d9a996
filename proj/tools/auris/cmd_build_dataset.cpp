// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>

#include <CLI11.hpp>
#include <json.hpp>

#include "auris/audio/dsp.hpp"
#include "auris/audio/wav.hpp"
#include "auris/common/error.hpp"
#include "auris/data/pipeline.hpp"
#include "common.hpp"

namespace auris::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

// Decoded-recording cache of depth one. Speech slices are consumed in
// (source, offset) order, so sequential access stays warm.
class RecordingCache {
 public:
  audio::Waveform slice(const std::filesystem::path& path,
                        std::size_t start_sample, std::size_t count) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (path != cached_path_) {
      cached_ = audio::read_wav(path);
      cached_path_ = path;
    }
    audio::Waveform out;
    out.sample_rate_hz = cached_.sample_rate_hz;
    out.samples.assign(cached_.samples.begin() + start_sample,
                       cached_.samples.begin() + start_sample + count);
    return out;
  }

 private:
  std::mutex mutex_;
  std::filesystem::path cached_path_;
  audio::Waveform cached_;
};

struct EnvCorpusSpec {
  data::SceneLabel label;
  std::filesystem::path dir;
  std::string level_source;  // corpus label whose RMS is the divisor
};

struct Sources {
  std::vector<std::filesystem::path> speech_files;
  std::vector<EnvCorpusSpec> environments;
};

Sources parse_sources(const std::filesystem::path& sources_path) {
  std::ifstream in(sources_path);
  if (!in) {
    throw DatasetError(DatasetErrc::BadSourcesFile,
                       "cannot open sources file: " + sources_path.string());
  }
  ordered_json j;
  try {
    in >> j;
  } catch (const ordered_json::parse_error& e) {
    throw DatasetError(DatasetErrc::BadSourcesFile,
                       "sources file is not valid JSON: " +
                           std::string(e.what()));
  }
  const auto base = sources_path.parent_path();
  Sources sources;

  if (!j.contains("speech")) {
    throw DatasetError(DatasetErrc::BadSourcesFile,
                       "sources file lacks a \"speech\" entry");
  }
  const auto& speech = j["speech"];
  if (speech.contains("files")) {
    for (const auto& f : speech["files"]) {
      sources.speech_files.push_back(base / f.get<std::string>());
    }
  }
  if (speech.contains("dir")) {
    const auto dir = base / speech["dir"].get<std::string>();
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.path().extension() == ".wav") {
        sources.speech_files.push_back(entry.path());
      }
    }
  }
  std::sort(sources.speech_files.begin(), sources.speech_files.end());
  if (sources.speech_files.empty()) {
    throw DatasetError(DatasetErrc::BadSourcesFile,
                       "no speech files listed in sources");
  }

  for (const auto& je : j.value("environments", ordered_json::array())) {
    EnvCorpusSpec spec;
    const auto label_name = je.at("label").get<std::string>();
    auto label = data::scene_label_from_string(label_name);
    if (!label || data::is_speech_in(*label) ||
        *label == data::SceneLabel::InterferingSpeakers) {
      throw DatasetError(DatasetErrc::BadLabel,
                         "not an environment label: " + label_name);
    }
    spec.label = *label;
    spec.dir = base / je.at("dir").get<std::string>();
    spec.level_source = je.value("level_source", label_name);
    sources.environments.push_back(std::move(spec));
  }
  if (sources.environments.empty()) {
    throw DatasetError(DatasetErrc::BadSourcesFile,
                       "no environment corpora listed in sources");
  }
  return sources;
}

std::vector<std::filesystem::path> wavs_in(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".wav") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

void run(const std::filesystem::path& sources_path,
         const std::filesystem::path& out_dir, std::uint64_t seed,
         std::int64_t interfering_quota) {
  const Sources sources = parse_sources(sources_path);
  auto cache = std::make_shared<RecordingCache>();

  // Slice speech recordings; pooled RMS over the slices is the
  // standardisation reference.
  std::vector<data::SourceClip> speech_clips;
  data::PooledRms speech_rms;
  for (const auto& file : sources.speech_files) {
    const audio::Waveform recording = audio::read_wav(file);
    const auto slices = data::slice_speech_recording(recording);
    const std::string source_id = file.filename().string();
    for (std::size_t i = 0; i < slices.size(); ++i) {
      speech_rms.add(slices[i]);
      data::SourceClip clip;
      clip.source_id = source_id;
      clip.offset_s = 1.0 + 10.0 * static_cast<double>(i);
      const std::size_t start =
          16000 + i * 160000;  // 1 s lead-in, then 10 s steps
      clip.load = [cache, file, start] {
        return cache->slice(file, start, 160000);
      };
      speech_clips.push_back(std::move(clip));
    }
  }
  const double reference_rms = speech_rms.value();

  // Pooled RMS per environment corpus.
  std::map<std::string, double> corpus_rms;
  std::map<data::SceneLabel, std::vector<std::filesystem::path>> corpus_files;
  for (const auto& env : sources.environments) {
    auto files = wavs_in(env.dir);
    if (files.empty()) {
      throw DatasetError(DatasetErrc::EmptyCorpus,
                         "no WAV files under " + env.dir.string());
    }
    data::PooledRms acc;
    for (const auto& f : files) acc.add(audio::read_wav(f));
    corpus_rms[std::string(data::to_string(env.label))] = acc.value();
    corpus_files[env.label] = std::move(files);
  }

  // Standardisation gain per corpus: reference over the level-source RMS.
  std::map<data::SceneLabel, std::vector<data::SourceClip>> corpora;
  for (const auto& env : sources.environments) {
    auto divisor = corpus_rms.find(env.level_source);
    if (divisor == corpus_rms.end()) {
      throw DatasetError(DatasetErrc::BadSourcesFile,
                         "level_source \"" + env.level_source +
                             "\" is not a listed corpus");
    }
    const double gain =
        data::standardisation_gain(divisor->second, reference_rms);
    std::vector<data::SourceClip> clips;
    for (const auto& file : corpus_files[env.label]) {
      data::SourceClip clip;
      clip.source_id = file.filename().string();
      clip.load = [file, gain] {
        audio::Waveform w = audio::read_wav(file);
        for (auto& s : w.samples) s = static_cast<float>(s * gain);
        return w;
      };
      clips.push_back(std::move(clip));
    }
    corpora[env.label] = std::move(clips);
  }

  data::BuildConfig cfg;
  cfg.out_dir = out_dir;
  cfg.seed = seed;
  cfg.interfering_quota = interfering_quota;
  cfg.reference_rms = reference_rms;
  cfg.per_corpus_rms = corpus_rms;

  std::filesystem::create_directories(out_dir);
  const data::DatasetManifest manifest =
      data::build_mixed_dataset(std::move(speech_clips), std::move(corpora), cfg);
  data::save_manifest_json(manifest, out_dir / "manifest.json");
  data::save_manifest_csv(manifest, out_dir / "manifest.csv");

  ordered_json resolved;
  resolved["command"] = "build-dataset";
  resolved["sources"] = sources_path.string();
  resolved["out"] = out_dir.string();
  resolved["seed"] = seed;
  resolved["interfering_quota"] = interfering_quota;
  resolved["split_ratios"] = cfg.split_ratios;
  resolved["reference_rms"] = reference_rms;
  resolved["per_corpus_rms"] = corpus_rms;
  write_resolved_config(out_dir, resolved);

  std::cerr << "build-dataset: " << manifest.clips.size() << " clips, "
            << manifest.skipped.size() << " skipped, manifest written to "
            << (out_dir / "manifest.json").string() << "\n";
}

}  // namespace

void register_build_dataset(CLI::App& app, const GlobalOptions& global) {
  auto cmd = app.add_subcommand(
      "build-dataset",
      "Standardise, mix and split source corpora into a scene dataset");
  auto sources = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>();
  auto quota = std::make_shared<std::int64_t>(-1);
  cmd->add_option("--sources", *sources,
                  "Corpus descriptor JSON (speech files + environment dirs)")
      ->required();
  cmd->add_option("--out", *out, "Output dataset directory")->required();
  cmd->add_option("--interfering-quota", *quota,
                  "Cap on leftover speech clips kept as interfering_speakers "
                  "(-1 keeps all)");
  cmd->callback([sources, out, quota, &global] {
    run(*sources, *out, global.seed, *quota);
  });
}

}  // namespace auris::cli
