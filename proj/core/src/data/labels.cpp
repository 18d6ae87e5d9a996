// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/data/labels.hpp"

namespace auris::data {
namespace {

constexpr std::array<std::string_view, kSceneLabelCount> kNames = {
    "cocktail_party",
    "interfering_speakers",
    "in_traffic",
    "in_vehicle",
    "music",
    "quiet_indoors",
    "reverberant_environment",
    "wind_turbulence",
    "speech_in_traffic",
    "speech_in_vehicle",
    "speech_in_music",
    "speech_in_quiet_indoors",
    "speech_in_reverberant_env",
    "speech_in_wind_turbulence",
};

}  // namespace

const std::array<SceneLabel, kSceneLabelCount>& all_scene_labels() {
  static const std::array<SceneLabel, kSceneLabelCount> labels = [] {
    std::array<SceneLabel, kSceneLabelCount> out{};
    for (int i = 0; i < kSceneLabelCount; ++i) {
      out[i] = static_cast<SceneLabel>(i);
    }
    return out;
  }();
  return labels;
}

std::string_view to_string(SceneLabel label) {
  return kNames[static_cast<int>(label)];
}

std::optional<SceneLabel> scene_label_from_string(std::string_view name) {
  for (int i = 0; i < kSceneLabelCount; ++i) {
    if (kNames[i] == name) return static_cast<SceneLabel>(i);
  }
  return std::nullopt;
}

bool is_speech_in(SceneLabel label) {
  return static_cast<int>(label) >= static_cast<int>(SceneLabel::SpeechInTraffic);
}

const std::array<SceneLabel, 6>& mixable_environments() {
  static const std::array<SceneLabel, 6> envs = {
      SceneLabel::InTraffic,       SceneLabel::InVehicle,
      SceneLabel::Music,           SceneLabel::QuietIndoors,
      SceneLabel::ReverberantEnvironment, SceneLabel::WindTurbulence,
  };
  return envs;
}

std::optional<SceneLabel> speech_partner(SceneLabel environment) {
  switch (environment) {
    case SceneLabel::InTraffic: return SceneLabel::SpeechInTraffic;
    case SceneLabel::InVehicle: return SceneLabel::SpeechInVehicle;
    case SceneLabel::Music: return SceneLabel::SpeechInMusic;
    case SceneLabel::QuietIndoors: return SceneLabel::SpeechInQuietIndoors;
    case SceneLabel::ReverberantEnvironment:
      return SceneLabel::SpeechInReverberantEnv;
    case SceneLabel::WindTurbulence:
      return SceneLabel::SpeechInWindTurbulence;
    default:
      return std::nullopt;
  }
}

}  // namespace auris::data
