// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "auris/eval/metrics.hpp"

namespace auris::eval {

// Renders the per-label PR curves and the confusion heat map side by side
// into one standalone SVG.
void write_report_svg(const EvalReport& report,
                      const std::filesystem::path& path);

}  // namespace auris::eval
