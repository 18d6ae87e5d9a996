// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "auris/audio/waveform.hpp"
#include "auris/data/manifest.hpp"

namespace auris::data {

// A source clip loaded on demand, so corpora never need to sit in memory
// whole. The loader must be pure: repeated calls return identical samples.
struct SourceClip {
  std::string source_id;
  double offset_s = 0.0;
  std::function<audio::Waveform()> load;
};

// Pooled RMS over a corpus: sqrt(sum of squares / total samples), not the
// mean of per-clip RMS values.
class PooledRms {
 public:
  void add(const audio::Waveform& w);
  double value() const;
  std::uint64_t sample_count() const { return count_; }

 private:
  double sum_sq_ = 0.0;
  std::uint64_t count_ = 0;
};

double compute_corpus_rms(const std::vector<audio::Waveform>& clips);

// Scales every clip by reference_rms / own_rms.
std::vector<audio::Waveform> standardise_corpus(
    std::vector<audio::Waveform> clips, double own_rms, double reference_rms);

inline double standardisation_gain(double own_rms, double reference_rms) {
  return reference_rms / own_rms;
}

// Drops the first second, then emits consecutive non-overlapping 10 s
// clips, at most 110 per recording; a trailing partial clip is discarded.
std::vector<audio::Waveform> slice_speech_recording(const audio::Waveform& w);

inline constexpr std::array<double, 5> kSnrCycleDb = {-10.0, -5.0, 0.0, 5.0,
                                                      10.0};

struct BuildConfig {
  std::filesystem::path out_dir;
  std::uint64_t seed = 0;
  std::array<double, 3> split_ratios = {0.70, 0.10, 0.20};
  // Number of leftover speech clips kept as interfering_speakers;
  // -1 means all of them.
  std::int64_t interfering_quota = -1;
  // Standardisation constants, recorded in the manifest for provenance.
  double reference_rms = 0.0;
  std::map<std::string, double> per_corpus_rms;
};

// Builds the mixed dataset under cfg.out_dir (clips/<label>/<id>.wav) and
// returns the manifest. Inputs must already be standardised. Per mixable
// environment the deterministically ordered corpus keeps its first
// ceil(n/2) clips unmixed and mixes the rest with distinct speech clips,
// cycling SNR -10/-5/0/5/10 dB by pair index; leftover speech becomes
// interfering_speakers. Silent sources (RMS < 1e-8) are skipped and noted.
DatasetManifest build_mixed_dataset(
    std::vector<SourceClip> speech_clips,
    std::map<SceneLabel, std::vector<SourceClip>> environment_corpora,
    const BuildConfig& cfg);

// Largest-remainder apportionment of n clips over the three ratios; ties
// go to the earlier split.
std::array<std::size_t, 3> largest_remainder_split(
    std::size_t n, const std::array<double, 3>& ratios);

// Per label: deterministic shuffle seeded from (seed, label), then
// largest-remainder assignment. Errors if a label has fewer than 3 clips.
void split_dataset(DatasetManifest& manifest,
                   const std::array<double, 3>& ratios, std::uint64_t seed);

}  // namespace auris::data
