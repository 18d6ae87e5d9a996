// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

namespace auris::train {

// y' = y*(1 - epsilon) + epsilon/2, elementwise on a {0,1} target vector.
std::vector<float> smooth_labels(std::span<const float> y, double epsilon);

// Scores are clamped into [kProbFloor, 1 - kProbFloor] before the logs.
inline constexpr double kProbFloor = 1e-7;

struct FocalLoss {
  double alpha = 0.25;
  double gamma = 2.0;

  // Per-label loss:
  //   -alpha*y*(1-p)^gamma*ln(p) - (1-alpha)*(1-y)*p^gamma*ln(1-p)
  double value(double p, double target) const;

  // d(loss)/d(logit) with p = sigmoid(logit); zero where the clamp binds.
  double dvalue_dlogit(double p, double target) const;
};

// Mean over all labels and examples. logits and targets are row-major
// [example][label].
double batch_focal_loss(std::span<const float> logits,
                        std::span<const float> targets, int class_count,
                        const FocalLoss& loss);

double sigmoid(double logit);

}  // namespace auris::train
