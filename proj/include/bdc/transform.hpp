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
#include <numbers>
#include <string>

#include "bdc/core.hpp"
#include "bdc/error.hpp"

namespace bdc {

/// Orthonormal DCT-II basis. Row u holds the u-th cosine basis vector, so
/// C * C^T = I and the inverse transform is the transpose.
struct DctMatrix {
  std::array<double, kBlockSize> entries{};

  double operator()(std::size_t u, std::size_t v) const {
    return entries[u * kBlockDim + v];
  }
  double& operator()(std::size_t u, std::size_t v) {
    return entries[u * kBlockDim + v];
  }

  friend bool operator==(const DctMatrix&, const DctMatrix&) = default;
};

/// Only n == 8 is supported. The first row is the constant sqrt(1/n); the
/// remaining rows are sqrt(2/n) * cos(u (2v + 1) pi / 2n).
inline DctMatrix build_dct_matrix(std::size_t n = kBlockDim) {
  if (n != kBlockDim) {
    throw Error(Errc::unsupported_size,
                "DCT block size " + std::to_string(n) + " (only 8 supported)");
  }
  const double nd = static_cast<double>(n);
  DctMatrix c;
  for (std::size_t u = 0; u < n; ++u) {
    const double scale = u == 0 ? std::sqrt(1.0 / nd) : std::sqrt(2.0 / nd);
    for (std::size_t v = 0; v < n; ++v) {
      const double angle = static_cast<double>(u) *
                           static_cast<double>(2 * v + 1) * std::numbers::pi /
                           (2.0 * nd);
      c(u, v) = u == 0 ? scale : scale * std::cos(angle);
    }
  }
  return c;
}

/// Process-wide cached matrix; initialised once, read-only afterwards.
inline const DctMatrix& dct_matrix() {
  static const DctMatrix c = build_dct_matrix(kBlockDim);
  return c;
}

namespace detail {

// out = (transpose_a ? A^T : A) * B
template <typename Lhs, typename Rhs>
std::array<double, kBlockSize> matmul(const Lhs& a, bool transpose_a,
                                      const Rhs& b) {
  std::array<double, kBlockSize> out{};
  for (std::size_t i = 0; i < kBlockDim; ++i) {
    for (std::size_t j = 0; j < kBlockDim; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < kBlockDim; ++k) {
        const double lhs = transpose_a ? a[k * kBlockDim + i]
                                       : a[i * kBlockDim + k];
        acc += lhs * b[k * kBlockDim + j];
      }
      out[i * kBlockDim + j] = acc;
    }
  }
  return out;
}

// out = A * (transpose_b ? B^T : B)
template <typename Lhs, typename Rhs>
std::array<double, kBlockSize> matmul_right(const Lhs& a, const Rhs& b,
                                            bool transpose_b) {
  std::array<double, kBlockSize> out{};
  for (std::size_t i = 0; i < kBlockDim; ++i) {
    for (std::size_t j = 0; j < kBlockDim; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < kBlockDim; ++k) {
        const double rhs = transpose_b ? b[j * kBlockDim + k]
                                       : b[k * kBlockDim + j];
        acc += a[i * kBlockDim + k] * rhs;
      }
      out[i * kBlockDim + j] = acc;
    }
  }
  return out;
}

}  // namespace detail

/// 2-D DCT by row-column decomposition: C * P * C^T.
inline CoeffBlock dct_forward(const ShiftedBlock& block) {
  const auto& c = dct_matrix().entries;
  const auto columns = detail::matmul(c, false, block.values);
  CoeffBlock out;
  out.values = detail::matmul_right(columns, c, true);
  return out;
}

/// C^T * D * C. Rounding and the +128 shift belong to level_shift_inverse.
inline ShiftedBlock dct_inverse(const CoeffBlock& coeffs) {
  const auto& c = dct_matrix().entries;
  const auto columns = detail::matmul(c, true, coeffs.values);
  ShiftedBlock out;
  out.values = detail::matmul_right(columns, c, false);
  return out;
}

}  // namespace bdc
