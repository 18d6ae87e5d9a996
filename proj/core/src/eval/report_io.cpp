// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/eval/report_io.hpp"

#include <fstream>

#include <json.hpp>

namespace auris::eval {
namespace {

using ordered_json = nlohmann::ordered_json;

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  return out;
}

std::string label_name(const EvalReport& report, int label) {
  if (label < static_cast<int>(report.label_names.size())) {
    return report.label_names[label];
  }
  return "label_" + std::to_string(label);
}

}  // namespace

void write_report_json(const EvalReport& report,
                       const std::filesystem::path& path) {
  ordered_json j;
  j["class_count"] = report.class_count;
  j["window_count"] = report.window_count;
  j["map"] = report.map;
  j["accuracy"] = report.accuracy;

  ordered_json labels = ordered_json::array();
  for (const auto& pr : report.pr) {
    ordered_json jl;
    jl["label"] = label_name(report, pr.label);
    jl["average_precision"] = pr.average_precision;
    jl["present_in_truth"] = pr.present_in_truth;
    ordered_json points = ordered_json::array();
    for (const auto& p : pr.points) {
      points.push_back({{"threshold", p.threshold},
                        {"precision", p.precision},
                        {"recall", p.recall}});
    }
    jl["points"] = std::move(points);
    labels.push_back(std::move(jl));
  }
  j["per_label"] = std::move(labels);
  j["confusion"] = report.confusion;

  open_out(path) << j.dump(2) << "\n";
}

void write_confusion_csv(const EvalReport& report,
                         const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "true\\predicted";
  for (int c = 0; c < report.class_count; ++c) {
    out << ',' << label_name(report, c);
  }
  out << '\n';
  for (int r = 0; r < report.class_count; ++r) {
    out << label_name(report, r);
    for (int c = 0; c < report.class_count; ++c) {
      out << ',' << report.confusion[r][c];
    }
    out << '\n';
  }
}

void write_pr_curves_csv(const EvalReport& report,
                         const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "label,threshold,precision,recall\n";
  for (const auto& pr : report.pr) {
    for (const auto& p : pr.points) {
      out << label_name(report, pr.label) << ',' << p.threshold << ','
          << p.precision << ',' << p.recall << '\n';
    }
  }
}

void write_gain_sweep_csv(const std::vector<GainPoint>& points,
                          const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "gain_db,map,accuracy\n";
  for (const auto& p : points) {
    out << p.gain_db << ',' << p.map << ',' << p.accuracy << '\n';
  }
}

void write_latency_json(const LatencyReport& report,
                        const std::filesystem::path& path) {
  ordered_json j;
  j["repeats"] = report.repeats;
  j["model_load_ms"] = report.model_load_ms;
  ordered_json durations = ordered_json::array();
  for (const auto& d : report.durations) {
    durations.push_back({{"seconds", d.seconds},
                         {"runs_ms", d.runs_ms},
                         {"mean_ms", d.mean_ms}});
  }
  j["durations"] = std::move(durations);
  j["fit"] = {{"slope_ms_per_s", report.fit.slope},
              {"intercept_ms", report.fit.intercept},
              {"r_squared", report.fit.r_squared}};
  open_out(path) << j.dump(2) << "\n";
}

void write_latency_csv(const LatencyReport& report,
                       const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "seconds,run,ms\n";
  for (const auto& d : report.durations) {
    for (std::size_t r = 0; r < d.runs_ms.size(); ++r) {
      out << d.seconds << ',' << r << ',' << d.runs_ms[r] << '\n';
    }
    out << d.seconds << ",mean," << d.mean_ms << '\n';
  }
}

}  // namespace auris::eval
