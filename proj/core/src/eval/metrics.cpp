// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/eval/metrics.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace auris::eval {
namespace {

void check_aligned(const std::vector<std::vector<float>>& scores,
                   const std::vector<int>& truth) {
  if (scores.empty() || scores.size() != truth.size()) {
    throw std::invalid_argument(
        "scores and truth must be non-empty and aligned");
  }
}

}  // namespace

std::pair<double, double> precision_recall_at_threshold(
    const std::vector<std::vector<float>>& scores,
    const std::vector<int>& truth, int label, double threshold,
    double undefined_value) {
  check_aligned(scores, truth);
  std::int64_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    // score >= threshold, except that a zero-confidence score is never a
    // detection; this keeps threshold 0.0 meaningful (everything with any
    // confidence is predicted) while flawless 1/0 scores reach mAP 1.0.
    const bool predicted =
        scores[i][label] >= threshold && scores[i][label] > 0.0f;
    const bool positive = truth[i] == label;
    if (predicted && positive) ++tp;
    else if (predicted && !positive) ++fp;
    else if (!predicted && positive) ++fn;
  }
  const double precision =
      (tp + fp) == 0 ? undefined_value : static_cast<double>(tp) / (tp + fp);
  const double recall =
      (tp + fn) == 0 ? undefined_value : static_cast<double>(tp) / (tp + fn);
  return {precision, recall};
}

double mean_average_precision(const std::vector<std::vector<float>>& scores,
                              const std::vector<int>& truth, int class_count,
                              bool warn) {
  check_aligned(scores, truth);
  double sum = 0.0;
  int counted = 0;
  for (int label = 0; label < class_count; ++label) {
    bool present = false;
    for (int t : truth) {
      if (t == label) {
        present = true;
        break;
      }
    }
    if (!present) {
      if (warn) {
        std::cerr << "warning: label " << label
                  << " absent from truth, skipped in mAP\n";
      }
      continue;
    }
    double ap = 0.0;
    for (int k = 0; k < kThresholdSteps; ++k) {
      ap += precision_recall_at_threshold(scores, truth, label, 0.1 * k)
                .first;
    }
    sum += ap / kThresholdSteps;
    ++counted;
  }
  if (counted == 0) {
    throw std::invalid_argument("no label present in truth, mAP undefined");
  }
  return sum / counted;
}

std::pair<std::vector<std::vector<std::int64_t>>, double>
confusion_and_accuracy(const std::vector<std::vector<float>>& scores,
                       const std::vector<int>& truth, int class_count) {
  check_aligned(scores, truth);
  std::vector<std::vector<std::int64_t>> matrix(
      class_count, std::vector<std::int64_t>(class_count, 0));
  std::int64_t correct = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    int best = 0;
    for (int c = 1; c < class_count; ++c) {
      if (scores[i][c] > scores[i][best]) best = c;  // ties keep lower index
    }
    ++matrix[truth[i]][best];
    if (best == truth[i]) ++correct;
  }
  const double accuracy =
      static_cast<double>(correct) / static_cast<double>(scores.size());
  return {std::move(matrix), accuracy};
}

EvalReport evaluate(const std::vector<std::vector<float>>& scores,
                    const std::vector<int>& truth, int class_count,
                    std::vector<std::string> label_names) {
  check_aligned(scores, truth);
  EvalReport report;
  report.class_count = class_count;
  report.label_names = std::move(label_names);
  report.window_count = static_cast<std::int64_t>(scores.size());

  double map_sum = 0.0;
  int map_count = 0;
  for (int label = 0; label < class_count; ++label) {
    LabelPr pr;
    pr.label = label;
    pr.points.resize(kThresholdSteps);
    double ap = 0.0;
    for (int k = 0; k < kThresholdSteps; ++k) {
      const double threshold = 0.1 * k;
      auto [precision, recall] =
          precision_recall_at_threshold(scores, truth, label, threshold);
      pr.points[k] = {threshold, precision, recall};
      ap += precision;
    }
    pr.average_precision = ap / kThresholdSteps;
    for (int t : truth) {
      if (t == label) {
        pr.present_in_truth = true;
        break;
      }
    }
    if (pr.present_in_truth) {
      map_sum += pr.average_precision;
      ++map_count;
    }
    report.pr.push_back(std::move(pr));
  }
  report.map = map_count > 0 ? map_sum / map_count : 0.0;

  auto [confusion, accuracy] =
      confusion_and_accuracy(scores, truth, class_count);
  report.confusion = std::move(confusion);
  report.accuracy = accuracy;
  return report;
}

LinearFit linear_fit(const std::vector<double>& x,
                     const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("linear_fit needs >= 2 aligned points");
  }
  const double n = static_cast<double>(x.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mean_x) * (x[i] - mean_x);
    sxy += (x[i] - mean_x) * (y[i] - mean_y);
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("linear_fit: x values are all equal");
  }

  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;

  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double predicted = fit.slope * x[i] + fit.intercept;
    ss_res += (y[i] - predicted) * (y[i] - predicted);
    ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
  }
  fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

}  // namespace auris::eval
