// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "auris/nn/model.hpp"

namespace auris::nn {

// Self-contained binary weight file. Layout (all integers little-endian):
//   magic "SCNW", u16 version, u8 dtype, u32 class_count,
//   u32 label_count { u16 len, bytes }*,
//   u32 layer_count { u8 kind, u8 stride, u32 kh, kw, cin, cout,
//                     f32 epsilon, u32 tensor_count
//                     { u64 blob_offset, u64 elem_count }* }*,
//   u64 blob_bytes, tensor blob, u32 crc32 of all preceding bytes.
// Saving at the model's own dtype round-trips bit-exactly; f32 -> f16
// conversion rounds to nearest even.
void save_weights(const ModelWeights& m, const std::filesystem::path& path,
                  Dtype dtype);

ModelWeights load_weights(const std::filesystem::path& path);

// Serialized size in bytes for a given model and storage dtype.
std::size_t weights_file_size(const ModelWeights& m, Dtype dtype);

}  // namespace auris::nn
