// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>

#include "auris/audio/waveform.hpp"

namespace auris::data {

// A clip with its label index, loaded on demand. The label indexes the
// model's label table (for scene datasets, SceneLabel order).
struct LabeledClip {
  std::string clip_id;
  int label = 0;
  std::function<audio::Waveform()> load;
};

}  // namespace auris::data
