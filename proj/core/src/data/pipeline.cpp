// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/data/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "auris/audio/dsp.hpp"
#include "auris/audio/wav.hpp"
#include "auris/common/error.hpp"
#include "auris/common/rng.hpp"

namespace auris::data {
namespace {

constexpr std::size_t kClipSamples = 160000;  // 10 s at 16 kHz
constexpr int kSpeechSliceLimit = 110;

bool source_order(const SourceClip& a, const SourceClip& b) {
  if (a.source_id != b.source_id) return a.source_id < b.source_id;
  return a.offset_s < b.offset_s;
}

std::string make_clip_id(SceneLabel label, std::size_t seq) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%05zu", seq);
  return std::string(to_string(label)) + "_" + buf;
}

audio::Waveform load_checked(const SourceClip& clip) {
  audio::Waveform w = clip.load();
  if (w.sample_rate_hz != audio::kCanonicalSampleRateHz) {
    throw AudioError(AudioErrc::SampleRateMismatch,
                     "source clip " + clip.source_id + " is not 16 kHz");
  }
  if (w.size() != kClipSamples) {
    throw DatasetError(DatasetErrc::BadClipLength,
                       "source clip " + clip.source_id + " is not 10 s");
  }
  return w;
}

// First pass: drop silent clips, keeping load costs bounded to one clip at
// a time.
std::vector<SourceClip> filter_silent(std::vector<SourceClip> clips,
                                      std::vector<SkippedClip>& skipped) {
  std::vector<SourceClip> kept;
  kept.reserve(clips.size());
  for (auto& clip : clips) {
    const audio::Waveform w = load_checked(clip);
    if (audio::rms(w) < audio::kSilenceRmsFloor) {
      skipped.push_back({clip.source_id, "digital silence (zero RMS)"});
      continue;
    }
    kept.push_back(std::move(clip));
  }
  return kept;
}

}  // namespace

void PooledRms::add(const audio::Waveform& w) {
  for (float s : w.samples) {
    sum_sq_ += static_cast<double>(s) * static_cast<double>(s);
  }
  count_ += w.size();
}

double PooledRms::value() const {
  if (count_ == 0) {
    throw DatasetError(DatasetErrc::EmptyCorpus,
                       "pooled RMS over an empty corpus");
  }
  return std::sqrt(sum_sq_ / static_cast<double>(count_));
}

double compute_corpus_rms(const std::vector<audio::Waveform>& clips) {
  PooledRms acc;
  for (const auto& clip : clips) acc.add(clip);
  return acc.value();
}

std::vector<audio::Waveform> standardise_corpus(
    std::vector<audio::Waveform> clips, double own_rms,
    double reference_rms) {
  if (own_rms < audio::kSilenceRmsFloor) {
    throw AudioError(AudioErrc::ZeroRms,
                     "cannot standardise a corpus with zero RMS");
  }
  const double gain = standardisation_gain(own_rms, reference_rms);
  for (auto& clip : clips) {
    for (auto& s : clip.samples) {
      s = static_cast<float>(s * gain);
    }
  }
  return clips;
}

std::vector<audio::Waveform> slice_speech_recording(const audio::Waveform& w) {
  if (w.sample_rate_hz != audio::kCanonicalSampleRateHz) {
    throw AudioError(AudioErrc::SampleRateMismatch,
                     "speech recording is not 16 kHz");
  }
  const std::size_t lead = static_cast<std::size_t>(w.sample_rate_hz);
  if (w.size() < lead) {
    throw DatasetError(DatasetErrc::RecordingTooShort,
                       "speech recording shorter than 1 s");
  }
  std::vector<audio::Waveform> clips;
  std::size_t start = lead;
  while (start + kClipSamples <= w.size() &&
         clips.size() < kSpeechSliceLimit) {
    audio::Waveform clip;
    clip.sample_rate_hz = w.sample_rate_hz;
    clip.samples.assign(w.samples.begin() + start,
                        w.samples.begin() + start + kClipSamples);
    clips.push_back(std::move(clip));
    start += kClipSamples;
  }
  return clips;
}

std::array<std::size_t, 3> largest_remainder_split(
    std::size_t n, const std::array<double, 3>& ratios) {
  std::array<std::size_t, 3> counts{};
  std::array<double, 3> fractions{};
  std::size_t assigned = 0;
  for (int i = 0; i < 3; ++i) {
    const double quota = static_cast<double>(n) * ratios[i];
    counts[i] = static_cast<std::size_t>(std::floor(quota));
    fractions[i] = quota - std::floor(quota);
    assigned += counts[i];
  }
  std::array<int, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return fractions[a] > fractions[b]; });
  for (std::size_t k = 0; assigned < n; ++k) {
    ++counts[order[k % 3]];
    ++assigned;
  }
  return counts;
}

void split_dataset(DatasetManifest& manifest,
                   const std::array<double, 3>& ratios, std::uint64_t seed) {
  const double sum = ratios[0] + ratios[1] + ratios[2];
  if (std::abs(sum - 1.0) > 1e-9) {
    throw DatasetError(DatasetErrc::BadSplitRatios,
                       "split ratios must sum to 1");
  }
  std::map<SceneLabel, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < manifest.clips.size(); ++i) {
    by_label[manifest.clips[i].label].push_back(i);
  }
  for (auto& [label, indices] : by_label) {
    if (indices.size() < 3) {
      throw DatasetError(
          DatasetErrc::LabelTooSmall,
          "label " + std::string(to_string(label)) + " has " +
              std::to_string(indices.size()) +
              " clips; cannot populate train/validation/test");
    }
    auto rng = make_rng(mix_seed(seed, fnv1a64(to_string(label))));
    deterministic_shuffle(indices, rng);
    const auto counts = largest_remainder_split(indices.size(), ratios);
    std::size_t pos = 0;
    for (int s = 0; s < 3; ++s) {
      for (std::size_t k = 0; k < counts[s]; ++k, ++pos) {
        manifest.clips[indices[pos]].split = static_cast<Split>(s);
      }
    }
  }
  manifest.split_ratios = ratios;
  manifest.seed = seed;
}

DatasetManifest build_mixed_dataset(
    std::vector<SourceClip> speech_clips,
    std::map<SceneLabel, std::vector<SourceClip>> environment_corpora,
    const BuildConfig& cfg) {
  for (const auto& [label, corpus] : environment_corpora) {
    if (is_speech_in(label) || label == SceneLabel::InterferingSpeakers) {
      throw DatasetError(DatasetErrc::BadLabel,
                         "corpus label " + std::string(to_string(label)) +
                             " is not an environment");
    }
    (void)corpus;
  }

  DatasetManifest manifest;
  manifest.seed = cfg.seed;
  manifest.split_ratios = cfg.split_ratios;
  manifest.reference_rms = cfg.reference_rms;
  manifest.per_corpus_rms = cfg.per_corpus_rms;

  // All ordering decisions happen before any mixing: sources are sorted by
  // (source_id, offset), silent clips dropped, and speech is consumed
  // sequentially across environments in label declaration order.
  std::sort(speech_clips.begin(), speech_clips.end(), source_order);
  speech_clips = filter_silent(std::move(speech_clips), manifest.skipped);
  for (auto& [label, corpus] : environment_corpora) {
    std::sort(corpus.begin(), corpus.end(), source_order);
    corpus = filter_silent(std::move(corpus), manifest.skipped);
  }

  std::size_t speech_needed = 0;
  for (SceneLabel env : mixable_environments()) {
    auto it = environment_corpora.find(env);
    if (it == environment_corpora.end()) continue;
    speech_needed += it->second.size() / 2;  // mixed half rounds down
  }
  if (speech_clips.size() < speech_needed) {
    throw DatasetError(
        DatasetErrc::InsufficientSpeechClips,
        "need " + std::to_string(speech_needed) + " speech clips for mixing, have " +
            std::to_string(speech_clips.size()));
  }

  const std::filesystem::path clip_root = cfg.out_dir / "clips";
  std::map<SceneLabel, std::size_t> seq;
  auto emit = [&](const audio::Waveform& w, ClipRecord record) {
    record.clip_id = make_clip_id(record.label, seq[record.label]++);
    const std::filesystem::path rel =
        std::filesystem::path("clips") /
        std::string(to_string(record.label)) / (record.clip_id + ".wav");
    record.path = rel.generic_string();
    record.duration_s = w.duration_s();
    std::filesystem::create_directories(cfg.out_dir / rel.parent_path());
    manifest.clipped_samples += audio::write_wav(w, cfg.out_dir / rel);
    manifest.clips.push_back(std::move(record));
  };

  std::size_t speech_cursor = 0;
  for (SceneLabel env : all_scene_labels()) {
    auto it = environment_corpora.find(env);
    if (it == environment_corpora.end()) continue;
    const auto& corpus = it->second;
    const auto partner = speech_partner(env);
    const std::size_t unmixed_count =
        partner ? (corpus.size() + 1) / 2 : corpus.size();

    for (std::size_t i = 0; i < unmixed_count; ++i) {
      ClipRecord rec;
      rec.label = env;
      rec.environment_source = corpus[i].source_id;
      emit(load_checked(corpus[i]), std::move(rec));
    }
    if (!partner) continue;
    for (std::size_t i = unmixed_count; i < corpus.size(); ++i) {
      const std::size_t pair_index = i - unmixed_count;
      const double snr = kSnrCycleDb[pair_index % kSnrCycleDb.size()];
      const SourceClip& speech = speech_clips[speech_cursor++];
      const audio::Waveform mixed = audio::mix_at_snr(
          load_checked(speech), load_checked(corpus[i]), snr);
      ClipRecord rec;
      rec.label = *partner;
      rec.snr_db = snr;
      rec.speech_source = SpeechRef{speech.source_id, speech.offset_s};
      rec.environment_source = corpus[i].source_id;
      emit(mixed, std::move(rec));
    }
  }

  // Leftover speech becomes interfering_speakers, unmodified.
  std::size_t leftover = speech_clips.size() - speech_cursor;
  if (cfg.interfering_quota >= 0) {
    leftover =
        std::min(leftover, static_cast<std::size_t>(cfg.interfering_quota));
  }
  for (std::size_t k = 0; k < leftover; ++k) {
    const SourceClip& speech = speech_clips[speech_cursor + k];
    ClipRecord rec;
    rec.label = SceneLabel::InterferingSpeakers;
    emit(load_checked(speech), std::move(rec));
  }

  split_dataset(manifest, cfg.split_ratios, cfg.seed);
  manifest.validate();
  return manifest;
}

}  // namespace auris::data
