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

#include <cmath>
#include <cstddef>
#include <numbers>

#include "bdc/core.hpp"

namespace bdc {

/// Reference DCT evaluated straight from the double-sum definition
///
///   D(u,v) = 1/4 a(u) a(v) sum_x sum_y P(x,y) cos((2x+1)u pi/16) cos((2y+1)v pi/16)
///
/// with a(0) = 1/sqrt(2), a(k) = 1 otherwise; x and u index rows. Shares no
/// code with dct_forward. O(N^4); meant for verification only.
inline CoeffBlock dct_oracle(const ShiftedBlock& block) {
  constexpr double pi = std::numbers::pi;
  const auto a = [](std::size_t k) { return k == 0 ? 1.0 / std::sqrt(2.0) : 1.0; };
  CoeffBlock out;
  for (std::size_t u = 0; u < kBlockDim; ++u) {
    for (std::size_t v = 0; v < kBlockDim; ++v) {
      double sum = 0.0;
      for (std::size_t x = 0; x < kBlockDim; ++x) {
        for (std::size_t y = 0; y < kBlockDim; ++y) {
          sum += block(x, y) *
                 std::cos(static_cast<double>((2 * x + 1) * u) * pi / 16.0) *
                 std::cos(static_cast<double>((2 * y + 1) * v) * pi / 16.0);
        }
      }
      out(u, v) = 0.25 * a(u) * a(v) * sum;
    }
  }
  return out;
}

}  // namespace bdc
