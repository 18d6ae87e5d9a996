// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace auris::eval {

// Per-window score rows (one float per label) against per-window true
// labels. Thresholded metrics, not PR-AUC: a label's average precision is
// the mean of its precision at the 11 thresholds 0.0, 0.1, ..., 1.0, and
// mAP is the unweighted mean over labels present in the truth. 0/0
// precision and recall are defined as 1.0.
inline constexpr int kThresholdSteps = 11;

struct PrPoint {
  double threshold = 0.0;
  double precision = 1.0;
  double recall = 1.0;
};

struct LabelPr {
  int label = 0;
  std::vector<PrPoint> points;  // kThresholdSteps entries
  double average_precision = 0.0;
  bool present_in_truth = false;
};

struct EvalReport {
  int class_count = 0;
  std::vector<std::string> label_names;
  std::vector<LabelPr> pr;
  double map = 0.0;
  std::vector<std::vector<std::int64_t>> confusion;  // [true][predicted]
  double accuracy = 0.0;
  std::int64_t window_count = 0;
};

// Value used when precision or recall is 0/0 (no predictions, or no
// positives): no decisions made means no mistakes made.
inline constexpr double kUndefinedPrDefault = 1.0;

// Decision rule: score >= threshold, and a zero score is never a
// detection. 0/0 precision or recall takes `undefined_value`.
std::pair<double, double> precision_recall_at_threshold(
    const std::vector<std::vector<float>>& scores,
    const std::vector<int>& truth, int label, double threshold,
    double undefined_value = kUndefinedPrDefault);

// Mean of per-label threshold-averaged precisions; labels absent from the
// truth are skipped (a warning goes to stderr when warn is set).
double mean_average_precision(const std::vector<std::vector<float>>& scores,
                              const std::vector<int>& truth, int class_count,
                              bool warn = true);

// Argmax prediction per window, ties to the lowest label index.
std::pair<std::vector<std::vector<std::int64_t>>, double>
confusion_and_accuracy(const std::vector<std::vector<float>>& scores,
                       const std::vector<int>& truth, int class_count);

EvalReport evaluate(const std::vector<std::vector<float>>& scores,
                    const std::vector<int>& truth, int class_count,
                    std::vector<std::string> label_names = {});

// Ordinary least squares y = slope*x + intercept with R^2. A zero-variance
// x errors; a perfect constant fit reports R^2 = 1.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
};
LinearFit linear_fit(const std::vector<double>& x,
                     const std::vector<double>& y);

}  // namespace auris::eval
