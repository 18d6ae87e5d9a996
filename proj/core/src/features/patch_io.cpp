// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "auris/features/patch_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "auris/common/error.hpp"

namespace auris::features {
namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) |
         (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

}  // namespace

void write_patch(const LogMelPatch& patch,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw AudioError(AudioErrc::UnwritablePath,
                     "cannot write patch: " + path.string());
  }
  put_u32(out, static_cast<std::uint32_t>(patch.frames));
  put_u32(out, static_cast<std::uint32_t>(patch.bands));
  for (float v : patch.values) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, 4);
    put_u32(out, bits);
  }
}

LogMelPatch read_patch(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw AudioError(AudioErrc::FileMissing,
                     "cannot open patch: " + path.string());
  }
  LogMelPatch p;
  p.frames = static_cast<int>(get_u32(in));
  p.bands = static_cast<int>(get_u32(in));
  if (!in || p.frames <= 0 || p.bands <= 0) {
    throw AudioError(AudioErrc::Truncated,
                     "bad patch header: " + path.string());
  }
  p.values.resize(static_cast<std::size_t>(p.frames) * p.bands);
  for (auto& v : p.values) {
    std::uint32_t bits = get_u32(in);
    std::memcpy(&v, &bits, 4);
  }
  if (!in) {
    throw AudioError(AudioErrc::Truncated,
                     "patch shorter than header claims: " + path.string());
  }
  return p;
}

}  // namespace auris::features
