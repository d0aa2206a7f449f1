// Copyright 2026 The BDC Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>

#include "bdc/core.hpp"
#include "bdc/error.hpp"

namespace bdc {

inline constexpr int kMinQuality = 1;
inline constexpr int kMaxQuality = 100;

inline constexpr bool valid_quality(int n) {
  return n >= kMinQuality && n <= kMaxQuality;
}

/// Luminance reference table for quality 50, row-major.
inline constexpr std::array<std::uint16_t, kBlockSize> kQ50 = {
    16, 11, 10, 16, 24,  40,  51,  61,   //
    12, 12, 14, 19, 26,  58,  60,  55,   //
    14, 13, 16, 24, 40,  57,  69,  56,   //
    14, 17, 22, 29, 51,  87,  80,  62,   //
    18, 22, 37, 56, 68,  109, 103, 77,   //
    24, 35, 55, 64, 81,  104, 113, 92,   //
    49, 64, 78, 87, 103, 121, 120, 101,  //
    72, 92, 95, 98, 112, 100, 103, 99,
};

/// Integer divisor table together with the quality level it was derived
/// from. Every divisor is at least 1.
class QuantMatrix {
 public:
  QuantMatrix(const std::array<std::uint16_t, kBlockSize>& divisors,
              int quality)
      : divisors_(divisors), quality_(quality) {
    if (!valid_quality(quality)) {
      throw Error(Errc::invalid_quality,
                  "quality " + std::to_string(quality) + " outside [1, 100]");
    }
    for (std::uint16_t d : divisors_) {
      if (d == 0) throw Error(Errc::invalid_input, "zero quantization divisor");
    }
  }

  int quality() const noexcept { return quality_; }
  std::uint16_t operator()(std::size_t u, std::size_t v) const {
    return divisors_[u * kBlockDim + v];
  }
  std::uint16_t operator[](std::size_t i) const { return divisors_[i]; }
  const std::array<std::uint16_t, kBlockSize>& divisors() const noexcept {
    return divisors_;
  }

  friend bool operator==(const QuantMatrix&, const QuantMatrix&) = default;

 private:
  std::array<std::uint16_t, kBlockSize> divisors_;
  int quality_;
};

inline QuantMatrix base_q50() { return QuantMatrix(kQ50, 50); }

/// Scales the reference table: (100 - n) / 50 for n >= 50, 50 / n below.
/// Scaled entries are rounded half away from zero and clamped to >= 1, so
/// quality 100 degenerates to an all-ones table. Integer arithmetic keeps
/// the result identical on every platform.
inline QuantMatrix scale_quality(int n) {
  if (!valid_quality(n)) {
    throw Error(Errc::invalid_quality,
                "quality " + std::to_string(n) + " outside [1, 100]");
  }
  // scale = num / den
  const std::uint32_t num = n >= 50 ? static_cast<std::uint32_t>(100 - n) : 50u;
  const std::uint32_t den = n >= 50 ? 50u : static_cast<std::uint32_t>(n);
  std::array<std::uint16_t, kBlockSize> divisors{};
  for (std::size_t i = 0; i < kBlockSize; ++i) {
    const std::uint32_t scaled = kQ50[i] * num;
    const std::uint32_t rounded = (2 * scaled + den) / (2 * den);
    divisors[i] = static_cast<std::uint16_t>(rounded < 1 ? 1 : rounded);
  }
  return QuantMatrix(divisors, n);
}

/// Element-wise round(coeff / divisor).
inline QuantBlock quantize(const CoeffBlock& coeffs, const QuantMatrix& q) {
  QuantBlock out;
  for (std::size_t i = 0; i < kBlockSize; ++i) {
    if (!std::isfinite(coeffs[i])) {
      throw Error(Errc::invalid_input, "non-finite DCT coefficient");
    }
    const double level = round_half_away(coeffs[i] / q[i]);
    if (std::abs(level) > std::numeric_limits<std::int16_t>::max()) {
      throw Error(Errc::encode_range,
                  "quantized level " + std::to_string(level) +
                      " does not fit 16 bits");
    }
    out[i] = static_cast<std::int16_t>(level);
  }
  return out;
}

inline CoeffBlock dequantize(const QuantBlock& levels, const QuantMatrix& q) {
  CoeffBlock out;
  for (std::size_t i = 0; i < kBlockSize; ++i) {
    out[i] = static_cast<double>(levels[i]) * static_cast<double>(q[i]);
  }
  return out;
}

}  // namespace bdc
