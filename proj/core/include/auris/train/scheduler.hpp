// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <limits>

namespace auris::train {

enum class PlateauAction { KeepLr, DecayLr, Stop };

// Decay-on-plateau over validation loss. Improvement means strictly lower
// than the best seen; any improvement resets both counters. After
// decay_patience consecutive non-improving epochs the learning rate is
// multiplied by `factor` and the decay counter restarts; after
// stop_patience consecutive non-improving epochs (measured from the last
// improvement, not from the decay) training stops.
class PlateauScheduler {
 public:
  PlateauScheduler(double initial_lr, int decay_patience = 3,
                   int stop_patience = 6, double factor = 0.5)
      : lr_(initial_lr),
        decay_patience_(decay_patience),
        stop_patience_(stop_patience),
        factor_(factor) {}

  PlateauAction observe(double validation_loss) {
    if (validation_loss < best_) {
      best_ = validation_loss;
      since_improvement_ = 0;
      since_decay_ = 0;
      return PlateauAction::KeepLr;
    }
    ++since_improvement_;
    ++since_decay_;
    if (since_improvement_ >= stop_patience_) {
      return PlateauAction::Stop;
    }
    if (since_decay_ >= decay_patience_) {
      since_decay_ = 0;
      lr_ *= factor_;
      return PlateauAction::DecayLr;
    }
    return PlateauAction::KeepLr;
  }

  double learning_rate() const { return lr_; }
  double best_loss() const { return best_; }

 private:
  double lr_;
  int decay_patience_;
  int stop_patience_;
  double factor_;
  double best_ = std::numeric_limits<double>::infinity();
  int since_improvement_ = 0;
  int since_decay_ = 0;
};

}  // namespace auris::train
