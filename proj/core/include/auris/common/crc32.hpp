// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace auris {

// CRC-32 (IEEE 802.3 polynomial, reflected), incremental form.
class Crc32 {
 public:
  void update(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint32_t crc = ~value_;
    for (std::size_t i = 0; i < len; ++i) {
      crc = table()[(crc ^ p[i]) & 0xffu] ^ (crc >> 8);
    }
    value_ = ~crc;
  }
  std::uint32_t value() const { return value_; }

  static std::uint32_t of(const void* data, std::size_t len) {
    Crc32 c;
    c.update(data, len);
    return c.value();
  }

 private:
  static const std::array<std::uint32_t, 256>& table() {
    static const std::array<std::uint32_t, 256> t = [] {
      std::array<std::uint32_t, 256> out{};
      for (std::uint32_t i = 0; i < 256; ++i) {
        std::uint32_t c = i;
        for (int k = 0; k < 8; ++k) {
          c = (c & 1u) ? (0xedb88320u ^ (c >> 1)) : (c >> 1);
        }
        out[i] = c;
      }
      return out;
    }();
    return t;
  }

  std::uint32_t value_ = 0;
};

}  // namespace auris
