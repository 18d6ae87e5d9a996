// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/eval/clip_eval.hpp"

#include "auris/audio/dsp.hpp"
#include "auris/common/parallel.hpp"
#include "auris/features/frontend.hpp"

namespace auris::eval {

void score_clips(const std::vector<data::LabeledClip>& clips,
                 const nn::ModelWeights& model, double gain_db,
                 unsigned threads, std::vector<std::vector<float>>& scores,
                 std::vector<int>& truth) {
  std::vector<std::vector<nn::ScoreVector>> per_clip(clips.size());
  parallel_for(clips.size(), threads, [&](std::size_t i) {
    thread_local features::LogMelFrontend frontend;
    audio::Waveform w = clips[i].load();
    if (gain_db != 0.0) w = audio::apply_gain(w, gain_db);
    per_clip[i] = nn::infer_clip(w, model, frontend);
  });

  scores.clear();
  truth.clear();
  for (std::size_t i = 0; i < clips.size(); ++i) {
    for (auto& sv : per_clip[i]) {
      scores.push_back(std::move(sv.scores));
      truth.push_back(clips[i].label);
    }
  }
}

EvalReport evaluate_clip_set(const std::vector<data::LabeledClip>& clips,
                             const nn::ModelWeights& model, double gain_db,
                             unsigned threads,
                             std::vector<std::string> label_names) {
  std::vector<std::vector<float>> scores;
  std::vector<int> truth;
  score_clips(clips, model, gain_db, threads, scores, truth);
  return evaluate(scores, truth, model.class_count, std::move(label_names));
}

std::vector<double> default_gain_grid() {
  std::vector<double> gains;
  for (int g = -20; g <= 20; g += 5) gains.push_back(g);
  return gains;
}

std::vector<GainPoint> gain_sweep_eval(
    const std::vector<data::LabeledClip>& clips,
    const nn::ModelWeights& model, const std::vector<double>& gains_db,
    unsigned threads) {
  std::vector<GainPoint> out;
  out.reserve(gains_db.size());
  for (double gain : gains_db) {
    std::vector<std::vector<float>> scores;
    std::vector<int> truth;
    score_clips(clips, model, gain, threads, scores, truth);
    GainPoint point;
    point.gain_db = gain;
    point.map = mean_average_precision(scores, truth, model.class_count,
                                       /*warn=*/false);
    point.accuracy =
        confusion_and_accuracy(scores, truth, model.class_count).second;
    out.push_back(point);
  }
  return out;
}

}  // namespace auris::eval
