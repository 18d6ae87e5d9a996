// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <cstring>

namespace auris::nn {

// IEEE 754 binary16 conversion with round-to-nearest-even. Used as a
// storage format only; arithmetic stays in f32.
inline std::uint16_t f32_to_f16(float value) {
  std::uint32_t bits;
  std::memcpy(&bits, &value, 4);
  const std::uint32_t sign = (bits >> 16) & 0x8000u;
  const std::uint32_t abs = bits & 0x7fffffffu;

  if (abs >= 0x7f800000u) {  // inf or NaN
    return static_cast<std::uint16_t>(
        sign | 0x7c00u | ((abs & 0x007fffffu) ? 0x0200u : 0u));
  }
  if (abs >= 0x38800000u) {
    // Normal f16 range; the +0xfff-plus-tie add rounds to nearest even and
    // naturally carries values past 65504 into infinity.
    const std::uint32_t tie = (abs >> 13) & 1u;
    std::uint32_t h = ((abs + 0xfffu + tie) - 0x38000000u) >> 13;
    if (h >= 0x7c00u) h = 0x7c00u;
    return static_cast<std::uint16_t>(sign | h);
  }
  if (abs <= 0x33000000u) {  // at or below half of the min subnormal
    return static_cast<std::uint16_t>(sign);
  }
  // Subnormal f16: shift the 24-bit significand into the 10-bit field.
  const std::uint32_t exp = abs >> 23;
  const std::uint32_t mant = (abs & 0x007fffffu) | 0x00800000u;
  const int shift = static_cast<int>(126u - exp);  // 14..24
  std::uint32_t half_mant = mant >> shift;
  const std::uint32_t remainder = mant & ((1u << shift) - 1u);
  const std::uint32_t halfway = 1u << (shift - 1);
  if (remainder > halfway || (remainder == halfway && (half_mant & 1u))) {
    ++half_mant;  // a carry into the normal range is still correct
  }
  return static_cast<std::uint16_t>(sign | half_mant);
}

inline float f16_to_f32(std::uint16_t h) {
  const std::uint32_t sign = (static_cast<std::uint32_t>(h) & 0x8000u) << 16;
  const std::uint32_t exp = (h >> 10) & 0x1fu;
  const std::uint32_t mant = h & 0x3ffu;
  std::uint32_t bits;
  if (exp == 0) {
    if (mant == 0) {
      bits = sign;
    } else {
      // Normalise the subnormal.
      std::uint32_t e = 0;
      std::uint32_t m = mant;
      while ((m & 0x400u) == 0) {
        ++e;
        m <<= 1;
      }
      bits = sign | ((113u - e) << 23) | ((m & 0x3ffu) << 13);
    }
  } else if (exp == 0x1f) {
    bits = sign | 0x7f800000u | (mant << 13);
  } else {
    bits = sign | ((exp + 112u) << 23) | (mant << 13);
  }
  float out;
  std::memcpy(&out, &bits, 4);
  return out;
}

}  // namespace auris::nn
