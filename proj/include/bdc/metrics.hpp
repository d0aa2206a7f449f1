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
#include <limits>
#include <string>
#include <utility>

#include "bdc/codec.hpp"
#include "bdc/error.hpp"

namespace bdc {

/// original / compressed. Sizes are byte counts.
inline double compression_ratio(std::size_t original, std::size_t compressed) {
  if (original == 0 || compressed == 0) {
    throw Error(Errc::invalid_input, "compression ratio needs non-zero sizes");
  }
  return static_cast<double>(original) / static_cast<double>(compressed);
}

/// Relative data redundancy, 1 - 1/cr.
inline double redundancy(double cr) {
  if (!(cr > 0.0)) throw Error(Errc::invalid_input, "compression ratio must be > 0");
  return 1.0 - 1.0 / cr;
}

struct Distortion {
  double mse = 0.0;
  /// +infinity when the images are identical.
  double psnr = std::numeric_limits<double>::infinity();
};

inline double psnr_from_mse(double mse) {
  if (mse <= 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

/// Mean squared sample difference over every channel, and PSNR against a
/// peak of 255.
inline Distortion mse_psnr(const Image& original, const Image& reconstructed) {
  if (original.width() != reconstructed.width() ||
      original.height() != reconstructed.height() ||
      original.channels() != reconstructed.channels()) {
    throw Error(Errc::dimension_mismatch, "images differ in size or channel count");
  }
  const std::size_t n = original.sample_count();
  if (n == 0) return {};
  // Exact integer accumulation; 255^2 * 2^40 samples still fits 64 bits.
  std::uint64_t sse = 0;
  for (std::size_t c = 0; c < original.channels(); ++c) {
    const auto a = original.plane(c).samples();
    const auto b = reconstructed.plane(c).samples();
    for (std::size_t i = 0; i < a.size(); ++i) {
      const int d = static_cast<int>(a[i]) - static_cast<int>(b[i]);
      sse += static_cast<std::uint64_t>(d * d);
    }
  }
  Distortion out;
  out.mse = static_cast<double>(sse) / static_cast<double>(n);
  out.psnr = psnr_from_mse(out.mse);
  return out;
}

struct CompressionReport {
  std::size_t original_bytes = 0;    // n1
  std::size_t compressed_bytes = 0;  // n2
  double cr = 0.0;
  double rd = 0.0;
  double mse = 0.0;
  double psnr = 0.0;

  /// Percentage size reduction, 100 * (1 - n2 / n1).
  double reduction_percent() const { return 100.0 * rd; }

  static CompressionReport make(std::size_t original, std::size_t compressed,
                                Distortion distortion) {
    CompressionReport r;
    r.original_bytes = original;
    r.compressed_bytes = compressed;
    r.cr = compression_ratio(original, compressed);
    r.rd = redundancy(r.cr);
    r.mse = distortion.mse;
    r.psnr = distortion.psnr;
    return r;
  }
};

}  // namespace bdc
