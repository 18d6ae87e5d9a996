// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "auris/features/frontend.hpp"

namespace auris::features {

// Debug dump format: 8-byte header (u32 frames, u32 bands, little-endian)
// followed by frame-major f32 values.
void write_patch(const LogMelPatch& patch, const std::filesystem::path& path);
LogMelPatch read_patch(const std::filesystem::path& path);

}  // namespace auris::features
