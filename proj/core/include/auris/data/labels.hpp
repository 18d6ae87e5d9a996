// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace auris::data {

// Closed set of 14 scene labels: six recorded environments plus music and
// cocktail party, and a speech_in_* partner for each mixable environment.
// cocktail_party and interfering_speakers have no partner.
enum class SceneLabel : int {
  CocktailParty = 0,
  InterferingSpeakers,
  InTraffic,
  InVehicle,
  Music,
  QuietIndoors,
  ReverberantEnvironment,
  WindTurbulence,
  SpeechInTraffic,
  SpeechInVehicle,
  SpeechInMusic,
  SpeechInQuietIndoors,
  SpeechInReverberantEnv,
  SpeechInWindTurbulence,
};

inline constexpr int kSceneLabelCount = 14;

const std::array<SceneLabel, kSceneLabelCount>& all_scene_labels();

std::string_view to_string(SceneLabel label);
std::optional<SceneLabel> scene_label_from_string(std::string_view name);

bool is_speech_in(SceneLabel label);

// The six environments that get half their clips mixed with speech,
// in declaration order.
const std::array<SceneLabel, 6>& mixable_environments();

// speech_in_* partner of a mixable environment.
std::optional<SceneLabel> speech_partner(SceneLabel environment);

}  // namespace auris::data
