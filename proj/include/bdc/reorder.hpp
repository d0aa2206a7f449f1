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
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "bdc/core.hpp"
#include "bdc/error.hpp"

namespace bdc {

/// kZigzag[i] is the row-major index of the i-th coefficient in scan order.
inline constexpr std::array<std::uint8_t, kBlockSize> kZigzag = {
     0,  1,  8, 16,  9,  2,  3, 10,
    17, 24, 32, 25, 18, 11,  4,  5,
    12, 19, 26, 33, 40, 48, 41, 34,
    27, 20, 13,  6,  7, 14, 21, 28,
    35, 42, 49, 56, 57, 50, 43, 36,
    29, 22, 15, 23, 30, 37, 44, 51,
    58, 59, 52, 45, 38, 31, 39, 46,
    53, 60, 61, 54, 47, 55, 62, 63,
};

using ZigzagVector = std::array<std::int16_t, kBlockSize>;

inline ZigzagVector zigzag(const QuantBlock& block) {
  ZigzagVector out{};
  for (std::size_t i = 0; i < kBlockSize; ++i) out[i] = block[kZigzag[i]];
  return out;
}

inline QuantBlock inverse_zigzag(std::span<const std::int16_t> vec) {
  if (vec.size() != kBlockSize) {
    throw Error(Errc::corrupt_stream,
                "zigzag vector has " + std::to_string(vec.size()) +
                    " entries, expected 64");
  }
  QuantBlock out;
  for (std::size_t i = 0; i < kBlockSize; ++i) out[kZigzag[i]] = vec[i];
  return out;
}

/// Zero-run coding: every maximal run of k zeros becomes the pair (0, k);
/// non-zero values pass through unchanged. A run longer than T can hold is
/// split into several pairs.
template <std::signed_integral T>
std::vector<T> rle_encode(std::span<const T> values) {
  std::vector<T> out;
  out.reserve(values.size() + 1);
  constexpr auto kMaxRun = static_cast<std::size_t>(std::numeric_limits<T>::max());
  std::size_t run = 0;
  const auto flush = [&] {
    while (run > 0) {
      const std::size_t chunk = run < kMaxRun ? run : kMaxRun;
      out.push_back(T{0});
      out.push_back(static_cast<T>(chunk));
      run -= chunk;
    }
  };
  for (T v : values) {
    if (v == 0) {
      ++run;
    } else {
      flush();
      out.push_back(v);
    }
  }
  flush();
  return out;
}

template <std::signed_integral T>
std::vector<T> rle_encode(const std::vector<T>& values) {
  return rle_encode(std::span<const T>(values));
}

/// Inverse of rle_encode. A trailing 0 with no count, or a non-positive
/// count, is a corrupt stream. When `limit` is set, decoding stops with an
/// error as soon as the output would exceed it.
template <std::signed_integral T>
std::vector<T> rle_decode(std::span<const T> symbols,
                          std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  std::vector<T> out;
  const auto overflow = [&](std::size_t index) {
    throw Error(Errc::corrupt_stream,
                "run-length stream expands past " + std::to_string(limit) +
                    " values at symbol " + std::to_string(index));
  };
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const T s = symbols[i];
    if (s != 0) {
      if (out.size() >= limit) overflow(i);
      out.push_back(s);
      continue;
    }
    if (i + 1 >= symbols.size()) {
      throw Error(Errc::corrupt_stream,
                  "zero symbol without run count at symbol " + std::to_string(i));
    }
    const T count = symbols[++i];
    if (count <= 0) {
      throw Error(Errc::corrupt_stream,
                  "non-positive run count " + std::to_string(count) +
                      " at symbol " + std::to_string(i));
    }
    if (static_cast<std::size_t>(count) > limit - out.size()) overflow(i);
    out.insert(out.end(), static_cast<std::size_t>(count), T{0});
  }
  return out;
}

template <std::signed_integral T>
std::vector<T> rle_decode(const std::vector<T>& symbols,
                          std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  return rle_decode(std::span<const T>(symbols), limit);
}

}  // namespace bdc
