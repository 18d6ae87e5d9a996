// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <vector>

#include "auris/eval/clip_eval.hpp"
#include "auris/eval/latency.hpp"
#include "auris/eval/metrics.hpp"

namespace auris::eval {

void write_report_json(const EvalReport& report,
                       const std::filesystem::path& path);

// confusion.csv: header row of predicted labels, one row per true label.
void write_confusion_csv(const EvalReport& report,
                         const std::filesystem::path& path);

// pr_curves.csv: label,threshold,precision,recall.
void write_pr_curves_csv(const EvalReport& report,
                         const std::filesystem::path& path);

void write_gain_sweep_csv(const std::vector<GainPoint>& points,
                          const std::filesystem::path& path);

void write_latency_json(const LatencyReport& report,
                        const std::filesystem::path& path);

// latency.csv: seconds,run,ms plus a mean row per duration.
void write_latency_csv(const LatencyReport& report,
                       const std::filesystem::path& path);

}  // namespace auris::eval
