// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/eval/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>

namespace auris::eval {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Distinct-ish hues around the colour wheel.
std::string label_color(int label, int count) {
  const int hue = count > 0 ? (360 * label) / count : 0;
  return "hsl(" + std::to_string(hue) + ",70%,45%)";
}

std::string label_name(const EvalReport& report, int label) {
  if (label < static_cast<int>(report.label_names.size())) {
    return report.label_names[label];
  }
  return "label_" + std::to_string(label);
}

}  // namespace

void write_report_svg(const EvalReport& report,
                      const std::filesystem::path& path) {
  const int pr_size = 360;
  const int margin = 50;
  const int cell = std::max(12, 280 / std::max(1, report.class_count));
  const int heat = cell * report.class_count;
  const int width = margin * 4 + pr_size + heat + 160;
  const int height = margin * 2 + std::max(pr_size, heat) + 60;

  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" font-family=\"sans-serif\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Left panel: recall-precision curves over the 11 thresholds.
  const int px0 = margin, py0 = margin;
  out << "<text x=\"" << px0 << "\" y=\"" << py0 - 16
      << "\" font-size=\"14\">Precision vs recall (mAP "
      << fmt(report.map) << ")</text>\n";
  out << "<rect x=\"" << px0 << "\" y=\"" << py0 << "\" width=\"" << pr_size
      << "\" height=\"" << pr_size
      << "\" fill=\"none\" stroke=\"#888\"/>\n";
  for (int g = 1; g < 5; ++g) {
    const int x = px0 + pr_size * g / 5;
    const int y = py0 + pr_size * g / 5;
    out << "<line x1=\"" << x << "\" y1=\"" << py0 << "\" x2=\"" << x
        << "\" y2=\"" << py0 + pr_size
        << "\" stroke=\"#eee\"/>\n";
    out << "<line x1=\"" << px0 << "\" y1=\"" << y << "\" x2=\""
        << px0 + pr_size << "\" y2=\"" << y << "\" stroke=\"#eee\"/>\n";
  }
  out << "<text x=\"" << px0 + pr_size / 2 - 20 << "\" y=\""
      << py0 + pr_size + 28 << "\" font-size=\"12\">recall</text>\n";
  out << "<text x=\"" << px0 - 38 << "\" y=\"" << py0 + pr_size / 2
      << "\" font-size=\"12\" transform=\"rotate(-90 " << px0 - 38 << ' '
      << py0 + pr_size / 2 << ")\">precision</text>\n";

  for (const auto& pr : report.pr) {
    if (!pr.present_in_truth) continue;
    std::string points;
    // Points sorted by recall for a left-to-right polyline.
    auto sorted = pr.points;
    std::sort(sorted.begin(), sorted.end(),
              [](const PrPoint& a, const PrPoint& b) {
                return a.recall < b.recall;
              });
    for (const auto& p : sorted) {
      const double x = px0 + p.recall * pr_size;
      const double y = py0 + (1.0 - p.precision) * pr_size;
      points += fmt(x) + "," + fmt(y) + " ";
    }
    out << "<polyline fill=\"none\" stroke=\""
        << label_color(pr.label, report.class_count)
        << "\" stroke-width=\"1.5\" points=\"" << points << "\"/>\n";
  }
  // Legend.
  int ly = py0;
  const int lx = px0 + pr_size + 14;
  for (const auto& pr : report.pr) {
    out << "<rect x=\"" << lx << "\" y=\"" << ly << "\" width=\"10\" "
        << "height=\"10\" fill=\""
        << label_color(pr.label, report.class_count) << "\"/>\n";
    out << "<text x=\"" << lx + 14 << "\" y=\"" << ly + 9
        << "\" font-size=\"10\">" << label_name(report, pr.label)
        << " (AP " << fmt(pr.average_precision) << ")</text>\n";
    ly += 16;
  }

  // Right panel: confusion heat map.
  std::int64_t max_cell = 1;
  for (const auto& row : report.confusion) {
    for (auto v : row) max_cell = std::max(max_cell, v);
  }
  const int hx0 = lx + 200, hy0 = margin;
  out << "<text x=\"" << hx0 << "\" y=\"" << hy0 - 16
      << "\" font-size=\"14\">Confusion matrix (accuracy "
      << fmt(report.accuracy) << ")</text>\n";
  for (int r = 0; r < report.class_count; ++r) {
    for (int c = 0; c < report.class_count; ++c) {
      const double frac =
          static_cast<double>(report.confusion[r][c]) / max_cell;
      const int shade = 255 - static_cast<int>(frac * 205);
      out << "<rect x=\"" << hx0 + c * cell << "\" y=\"" << hy0 + r * cell
          << "\" width=\"" << cell << "\" height=\"" << cell
          << "\" fill=\"rgb(" << shade << ',' << shade << ",255)\" "
          << "stroke=\"#ccc\" stroke-width=\"0.5\"/>\n";
      if (report.confusion[r][c] > 0 && cell >= 14) {
        out << "<text x=\"" << hx0 + c * cell + cell / 2 << "\" y=\""
            << hy0 + r * cell + cell / 2 + 3
            << "\" font-size=\"8\" text-anchor=\"middle\">"
            << report.confusion[r][c] << "</text>\n";
      }
    }
    out << "<text x=\"" << hx0 + heat + 4 << "\" y=\""
        << hy0 + r * cell + cell / 2 + 3 << "\" font-size=\"9\">"
        << label_name(report, r) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace auris::eval
