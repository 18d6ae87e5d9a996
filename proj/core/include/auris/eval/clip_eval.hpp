// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "auris/data/labeled_clip.hpp"
#include "auris/eval/metrics.hpp"
#include "auris/nn/model.hpp"

namespace auris::eval {

// Runs the model over every clip (optionally gained first) and flattens
// per-window scores; every window inherits its clip's label. Clip order is
// preserved, so results are independent of the thread count.
void score_clips(const std::vector<data::LabeledClip>& clips,
                 const nn::ModelWeights& model, double gain_db,
                 unsigned threads, std::vector<std::vector<float>>& scores,
                 std::vector<int>& truth);

EvalReport evaluate_clip_set(const std::vector<data::LabeledClip>& clips,
                             const nn::ModelWeights& model,
                             double gain_db = 0.0, unsigned threads = 1,
                             std::vector<std::string> label_names = {});

struct GainPoint {
  double gain_db = 0.0;
  double map = 0.0;
  double accuracy = 0.0;
};

// -20..+20 dB in 5 dB steps.
std::vector<double> default_gain_grid();

// Re-evaluates the clip set at each gain.
std::vector<GainPoint> gain_sweep_eval(
    const std::vector<data::LabeledClip>& clips, const nn::ModelWeights& model,
    const std::vector<double>& gains_db = default_gain_grid(),
    unsigned threads = 1);

}  // namespace auris::eval
