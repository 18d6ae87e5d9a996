// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <random>
#include <thread>

#include "auris/common/rng.hpp"
#include "auris/eval/latency.hpp"
#include "auris/eval/metrics.hpp"
#include "support/oracles.hpp"

using namespace auris;
using namespace auris::testing;

namespace {

// window scores for C classes with the truth vector.
struct Case {
  std::vector<std::vector<float>> scores;
  std::vector<int> truth;
};

Case fuzz_case(std::mt19937_64& rng, int max_classes = 14,
               int max_windows = 50) {
  std::uniform_int_distribution<int> class_dist(2, max_classes);
  std::uniform_int_distribution<int> window_dist(1, max_windows);
  const int classes = class_dist(rng);
  const int windows = window_dist(rng);
  std::uniform_real_distribution<float> score(0.0f, 1.0f);
  std::uniform_int_distribution<int> label(0, classes - 1);
  Case c;
  for (int w = 0; w < windows; ++w) {
    std::vector<float> row(classes);
    for (auto& v : row) v = score(rng);
    c.scores.push_back(std::move(row));
    c.truth.push_back(label(rng));
  }
  return c;
}

}  // namespace

TEST_CASE("precision and recall at a threshold") {
  SUBCASE("six-window hand case") {
    // scores .9 .8 .4 .3 .75 .2 against truths 1 1 0 0 0 1 for the label.
    std::vector<std::vector<float>> scores = {{0.9f, 0}, {0.8f, 0}, {0.4f, 0},
                                              {0.3f, 0}, {0.75f, 0}, {0.2f, 0}};
    std::vector<int> truth = {0, 0, 1, 1, 1, 0};  // label 0 is "positive"
    const auto [p, r] =
        eval::precision_recall_at_threshold(scores, truth, 0, 0.5);
    CHECK(p == doctest::Approx(0.6667).epsilon(1e-3));
    CHECK(r == doctest::Approx(0.6667).epsilon(1e-3));
  }
  SUBCASE("perfect scores") {
    std::vector<std::vector<float>> scores(4, std::vector<float>{1.0f, 0.0f});
    std::vector<int> truth(4, 0);
    for (double t : {0.0, 0.5, 1.0}) {
      const auto [p, r] =
          eval::precision_recall_at_threshold(scores, truth, 0, t);
      CHECK(p == 1.0);
      CHECK(r == 1.0);
    }
  }
  SUBCASE("threshold zero predicts every scored window positive") {
    std::vector<std::vector<float>> scores = {{0.1f, 0}, {0.3f, 0}, {0.7f, 0}};
    std::vector<int> truth = {0, 1, 0};
    const auto [p, r] =
        eval::precision_recall_at_threshold(scores, truth, 0, 0.0);
    CHECK(r == 1.0);
    CHECK(p == doctest::Approx(2.0 / 3.0));
  }
  SUBCASE("0/0 cases take the configurable undefined value") {
    std::vector<std::vector<float>> scores = {{0.3f, 0.0f}};
    std::vector<int> truth = {1};  // no positives for label 0
    const auto [p, r] =
        eval::precision_recall_at_threshold(scores, truth, 0, 0.9);
    CHECK(p == 1.0);  // no predictions either
    CHECK(r == 1.0);
    const auto [p0, r0] =
        eval::precision_recall_at_threshold(scores, truth, 0, 0.9, 0.0);
    CHECK(p0 == 0.0);
    CHECK(r0 == 0.0);
  }
  SUBCASE("empty input errors") {
    std::vector<std::vector<float>> scores;
    std::vector<int> truth;
    CHECK_THROWS(eval::precision_recall_at_threshold(scores, truth, 0, 0.5));
  }
}

TEST_CASE("threshold-averaged mAP") {
  SUBCASE("perfect predictions give 1.0") {
    std::vector<std::vector<float>> scores;
    std::vector<int> truth;
    for (int w = 0; w < 12; ++w) {
      std::vector<float> row(3, 0.0f);
      row[w % 3] = 1.0f;
      scores.push_back(row);
      truth.push_back(w % 3);
    }
    CHECK(eval::mean_average_precision(scores, truth, 3, false) == 1.0);
  }

  SUBCASE("uniform 0.5 scores have the closed-form AP") {
    // k of n windows carry the label; precision is k/n up to 0.5 and the
    // 0/0 rule gives 1.0 above it.
    const int n = 10, k = 3;
    std::vector<std::vector<float>> scores(n, std::vector<float>{0.5f, 0.5f});
    std::vector<int> truth(n, 1);
    for (int i = 0; i < k; ++i) truth[i] = 0;
    double ap0 = 0.0;
    for (int t = 0; t <= 10; ++t) {
      ap0 += 0.1 * t <= 0.5 ? static_cast<double>(k) / n : 1.0;
    }
    ap0 /= 11.0;
    // label 1 mirrors with n-k; mAP is their mean.
    double ap1 = 0.0;
    for (int t = 0; t <= 10; ++t) {
      ap1 += 0.1 * t <= 0.5 ? static_cast<double>(n - k) / n : 1.0;
    }
    ap1 /= 11.0;
    const double expected = (ap0 + ap1) / 2.0;
    CHECK(eval::mean_average_precision(scores, truth, 2, false) ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(map_oracle(scores, truth, 2) ==
          doctest::Approx(expected).epsilon(1e-12));
  }

  SUBCASE("six-window hand case AP equals the oracle") {
    std::vector<std::vector<float>> scores = {{0.9f, 0}, {0.8f, 0}, {0.4f, 0},
                                              {0.3f, 0}, {0.75f, 0}, {0.2f, 0}};
    std::vector<int> truth = {0, 0, 1, 1, 1, 0};
    const auto report = eval::evaluate(scores, truth, 2);
    double ap = 0.0;
    for (int t = 0; t <= 10; ++t) {
      ap += precision_oracle(scores, truth, 0, 0.1 * t);
    }
    ap /= 11.0;
    CHECK(report.pr[0].average_precision == doctest::Approx(ap).epsilon(1e-12));
  }

  SUBCASE("fuzzed agreement with the brute-force oracle") {
    auto rng = make_rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
      const auto c = fuzz_case(rng);
      const int classes = static_cast<int>(c.scores[0].size());
      const double got =
          eval::mean_average_precision(c.scores, c.truth, classes, false);
      CHECK(got == doctest::Approx(map_oracle(c.scores, c.truth, classes))
                       .epsilon(1e-12));
      CHECK(got >= 0.0);
      CHECK(got <= 1.0);
    }
  }

  SUBCASE("permutation invariance") {
    auto rng = make_rng(31);
    auto c = fuzz_case(rng);
    const int classes = static_cast<int>(c.scores[0].size());
    const double base =
        eval::mean_average_precision(c.scores, c.truth, classes, false);
    const double acc_base =
        eval::confusion_and_accuracy(c.scores, c.truth, classes).second;

    std::vector<std::size_t> perm(c.scores.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    deterministic_shuffle(perm, rng);
    Case shuffled;
    for (std::size_t i : perm) {
      shuffled.scores.push_back(c.scores[i]);
      shuffled.truth.push_back(c.truth[i]);
    }
    CHECK(eval::mean_average_precision(shuffled.scores, shuffled.truth,
                                       classes, false) ==
          doctest::Approx(base).epsilon(1e-12));
    CHECK(eval::confusion_and_accuracy(shuffled.scores, shuffled.truth,
                                       classes)
              .second == doctest::Approx(acc_base).epsilon(1e-12));
  }
}

TEST_CASE("confusion matrix and accuracy") {
  SUBCASE("identity predictions give a diagonal matrix") {
    std::vector<std::vector<float>> scores;
    std::vector<int> truth;
    for (int w = 0; w < 28; ++w) {
      std::vector<float> row(14, 0.1f);
      row[w % 14] = 0.9f;
      scores.push_back(row);
      truth.push_back(w % 14);
    }
    const auto [matrix, acc] = eval::confusion_and_accuracy(scores, truth, 14);
    CHECK(acc == 1.0);
    for (int r = 0; r < 14; ++r) {
      for (int c = 0; c < 14; ++c) {
        CHECK(matrix[r][c] == (r == c ? 2 : 0));
      }
    }
  }
  SUBCASE("all predicted as label zero") {
    std::vector<std::vector<float>> scores;
    std::vector<int> truth;
    for (int w = 0; w < 14 * 10; ++w) {
      std::vector<float> row(14, 0.0f);
      row[0] = 1.0f;
      scores.push_back(row);
      truth.push_back(w % 14);
    }
    const auto [matrix, acc] = eval::confusion_and_accuracy(scores, truth, 14);
    CHECK(acc == doctest::Approx(1.0 / 14.0).epsilon(1e-12));
    for (int r = 0; r < 14; ++r) CHECK(matrix[r][0] == 10);
  }
  SUBCASE("argmax ties break to the lowest index") {
    std::vector<std::vector<float>> scores = {{0.5f, 0.5f, 0.5f}};
    std::vector<int> truth = {2};
    const auto [matrix, acc] = eval::confusion_and_accuracy(scores, truth, 3);
    CHECK(matrix[2][0] == 1);
    CHECK(acc == 0.0);
  }
  SUBCASE("random case equals the tally oracle exactly") {
    auto rng = make_rng(64);
    Case c;
    std::uniform_real_distribution<float> score(0.0f, 1.0f);
    std::uniform_int_distribution<int> label(0, 13);
    for (int w = 0; w < 1000; ++w) {
      std::vector<float> row(14);
      for (auto& v : row) v = score(rng);
      c.scores.push_back(std::move(row));
      c.truth.push_back(label(rng));
    }
    const auto [matrix, acc] = eval::confusion_and_accuracy(c.scores, c.truth, 14);
    CHECK(matrix == confusion_oracle(c.scores, c.truth, 14));
    std::int64_t total = 0, diag = 0;
    for (int r = 0; r < 14; ++r) {
      for (int col = 0; col < 14; ++col) total += matrix[r][col];
      diag += matrix[r][r];
    }
    CHECK(total == 1000);
    CHECK(acc == doctest::Approx(static_cast<double>(diag) / 1000.0));
  }
  SUBCASE("monotone score transforms leave argmax metrics unchanged") {
    auto rng = make_rng(65);
    auto c = fuzz_case(rng);
    const int classes = static_cast<int>(c.scores[0].size());
    const auto base = eval::confusion_and_accuracy(c.scores, c.truth, classes);
    auto transformed = c.scores;
    for (auto& row : transformed) {
      for (auto& v : row) v = 0.1f + 0.5f * v * v * v;  // strictly increasing on [0,1]
    }
    const auto after =
        eval::confusion_and_accuracy(transformed, c.truth, classes);
    CHECK(after.first == base.first);
    CHECK(after.second == base.second);
  }
}

TEST_CASE("ordinary least squares fit") {
  SUBCASE("noiseless line recovered exactly") {
    const std::vector<double> x = {5, 10, 20, 30};
    std::vector<double> y;
    for (double v : x) y.push_back(30.0 * v + 50.0);
    const auto fit = eval::linear_fit(x, y);
    CHECK(std::abs(fit.slope - 30.0) < 1e-9);
    CHECK(std::abs(fit.intercept - 50.0) < 1e-9);
    CHECK(std::abs(fit.r_squared - 1.0) < 1e-9);
  }
  SUBCASE("constant data fits a flat line with r-squared one") {
    const std::vector<double> x = {1, 2, 3, 4};
    const std::vector<double> y = {7, 7, 7, 7};
    const auto fit = eval::linear_fit(x, y);
    CHECK(fit.slope == 0.0);
    CHECK(fit.intercept == 7.0);
    CHECK(fit.r_squared == 1.0);
  }
  SUBCASE("degenerate inputs error") {
    CHECK_THROWS(eval::linear_fit({1.0}, {2.0}));
    CHECK_THROWS(eval::linear_fit({1.0, 1.0}, {2.0, 3.0}));
  }
}

TEST_CASE("latency harness") {
  SUBCASE("constant-time fake model gives a flat line") {
    auto process = [](const audio::Waveform&) {
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
    };
    const auto report =
        eval::latency_benchmark_with({1.0, 2.0, 3.0, 4.0}, 3, process, 12.5);
    CHECK(report.model_load_ms == 12.5);
    REQUIRE(report.durations.size() == 4);
    for (const auto& d : report.durations) {
      CHECK(d.runs_ms.size() == 3);
      CHECK(d.mean_ms > 4.0);
      CHECK(d.mean_ms < 30.0);
    }
    CHECK(std::abs(report.fit.slope) < 2.0);
    CHECK(report.fit.intercept > 2.0);
  }
  SUBCASE("validation of durations and repeats") {
    auto nop = [](const audio::Waveform&) {};
    CHECK_THROWS(eval::latency_benchmark_with({1.0, 1.0}, 3, nop, 0.0));
    CHECK_THROWS(eval::latency_benchmark_with({-1.0, 2.0}, 3, nop, 0.0));
    CHECK_THROWS(eval::latency_benchmark_with({1.0, 2.0}, 0, nop, 0.0));
    CHECK_THROWS(eval::latency_benchmark_with({}, 3, nop, 0.0));
  }
}
