// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/train/losses.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace auris::train {

std::vector<float> smooth_labels(std::span<const float> y, double epsilon) {
  std::vector<float> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    out[i] = static_cast<float>(y[i] * (1.0 - epsilon) + epsilon / 2.0);
  }
  return out;
}

double sigmoid(double logit) { return 1.0 / (1.0 + std::exp(-logit)); }

namespace {
double clamp_p(double p) {
  return std::clamp(p, kProbFloor, 1.0 - kProbFloor);
}
}  // namespace

double FocalLoss::value(double p, double target) const {
  p = clamp_p(p);
  const double pos = -alpha * target * std::pow(1.0 - p, gamma) * std::log(p);
  const double neg =
      -(1.0 - alpha) * (1.0 - target) * std::pow(p, gamma) * std::log(1.0 - p);
  return pos + neg;
}

double FocalLoss::dvalue_dlogit(double p, double target) const {
  if (p <= kProbFloor || p >= 1.0 - kProbFloor) return 0.0;
  // d/dz of the positive term: alpha*y*(1-p)^g * (g*p*ln(p) - (1-p))
  // d/dz of the negative term: (1-alpha)*(1-y)*p^g * (p - g*(1-p)*ln(1-p))
  const double pos = alpha * target * std::pow(1.0 - p, gamma) *
                     (gamma * p * std::log(p) - (1.0 - p));
  const double neg = (1.0 - alpha) * (1.0 - target) * std::pow(p, gamma) *
                     (p - gamma * (1.0 - p) * std::log(1.0 - p));
  return pos + neg;
}

double batch_focal_loss(std::span<const float> logits,
                        std::span<const float> targets, int class_count,
                        const FocalLoss& loss) {
  if (logits.size() != targets.size() || logits.empty() ||
      logits.size() % class_count != 0) {
    throw std::invalid_argument("batch_focal_loss: shape mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    sum += loss.value(sigmoid(logits[i]), targets[i]);
  }
  return sum / static_cast<double>(logits.size());
}

}  // namespace auris::train
