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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bdc/error.hpp"

namespace bdc {

inline constexpr std::size_t kBlockDim = 8;
inline constexpr std::size_t kBlockSize = kBlockDim * kBlockDim;

/// Fixed 8x8 tile stored row-major. The tag keeps pixel, shifted,
/// coefficient and quantized tiles from being mixed up at compile time.
template <typename T, typename Tag>
struct Block {
  using value_type = T;

  std::array<T, kBlockSize> values{};

  static constexpr Block filled(T v) {
    Block b;
    b.values.fill(v);
    return b;
  }

  constexpr T& operator()(std::size_t row, std::size_t col) {
    return values[row * kBlockDim + col];
  }
  constexpr const T& operator()(std::size_t row, std::size_t col) const {
    return values[row * kBlockDim + col];
  }
  constexpr T& operator[](std::size_t i) { return values[i]; }
  constexpr const T& operator[](std::size_t i) const { return values[i]; }

  constexpr auto begin() { return values.begin(); }
  constexpr auto end() { return values.end(); }
  constexpr auto begin() const { return values.begin(); }
  constexpr auto end() const { return values.end(); }

  friend constexpr bool operator==(const Block&, const Block&) = default;
};

namespace tags {
struct Pixel {};
struct Shifted {};
struct Coeff {};
struct Quant {};
}  // namespace tags

using PixelBlock = Block<std::uint8_t, tags::Pixel>;
/// Zero-centred samples: the forward level shift output and the inverse
/// DCT output.
using ShiftedBlock = Block<double, tags::Shifted>;
using CoeffBlock = Block<double, tags::Coeff>;
using QuantBlock = Block<std::int16_t, tags::Quant>;

/// Half-away-from-zero, the single rounding rule used at every round site.
inline double round_half_away(double v) { return std::round(v); }

/// One 8-bit channel, row-major.
class ImagePlane {
 public:
  ImagePlane() = default;

  ImagePlane(std::size_t width, std::size_t height, std::uint8_t fill = 0)
      : width_(width), height_(height), samples_(width * height, fill) {}

  ImagePlane(std::size_t width, std::size_t height,
             std::vector<std::uint8_t> samples)
      : width_(width), height_(height), samples_(std::move(samples)) {
    if (samples_.size() != width_ * height_) {
      throw Error(Errc::invalid_input,
                  "plane sample count " + std::to_string(samples_.size()) +
                      " != " + std::to_string(width_) + "x" +
                      std::to_string(height_));
    }
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }

  std::uint8_t& at(std::size_t x, std::size_t y) {
    return samples_[y * width_ + x];
  }
  std::uint8_t at(std::size_t x, std::size_t y) const {
    return samples_[y * width_ + x];
  }

  std::span<const std::uint8_t> samples() const noexcept { return samples_; }
  std::span<std::uint8_t> samples() noexcept { return samples_; }

  friend bool operator==(const ImagePlane&, const ImagePlane&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> samples_;
};

/// Original plane dimensions plus the block grid that covers them.
struct TileLayout {
  std::size_t width = 0;
  std::size_t height = 0;

  static TileLayout for_size(std::size_t width, std::size_t height) {
    if (width == 0 || height == 0) {
      throw Error(Errc::invalid_input, "plane dimensions must be >= 1x1");
    }
    return TileLayout{width, height};
  }

  std::size_t blocks_x() const noexcept {
    return (width + kBlockDim - 1) / kBlockDim;
  }
  std::size_t blocks_y() const noexcept {
    return (height + kBlockDim - 1) / kBlockDim;
  }
  std::size_t block_count() const noexcept { return blocks_x() * blocks_y(); }

  friend bool operator==(const TileLayout&, const TileLayout&) = default;
};

struct Tiling {
  std::vector<PixelBlock> blocks;
  TileLayout layout;
};

/// Cuts a plane into 8x8 blocks in row-major block order. Partial blocks at
/// the right and bottom edges are completed by repeating the last column
/// and row.
inline Tiling tile_plane(const ImagePlane& plane) {
  const TileLayout layout = TileLayout::for_size(plane.width(), plane.height());
  Tiling out{{}, layout};
  out.blocks.reserve(layout.block_count());
  for (std::size_t by = 0; by < layout.blocks_y(); ++by) {
    for (std::size_t bx = 0; bx < layout.blocks_x(); ++bx) {
      PixelBlock block;
      for (std::size_t r = 0; r < kBlockDim; ++r) {
        const std::size_t y = std::min(by * kBlockDim + r, layout.height - 1);
        for (std::size_t c = 0; c < kBlockDim; ++c) {
          const std::size_t x = std::min(bx * kBlockDim + c, layout.width - 1);
          block(r, c) = plane.at(x, y);
        }
      }
      out.blocks.push_back(block);
    }
  }
  return out;
}

/// Reassembles blocks produced by tile_plane and crops the padding.
inline ImagePlane untile_plane(std::span<const PixelBlock> blocks,
                               const TileLayout& layout) {
  if (layout.width == 0 || layout.height == 0) {
    throw Error(Errc::invalid_input, "plane dimensions must be >= 1x1");
  }
  if (blocks.size() != layout.block_count()) {
    throw Error(Errc::corrupt_stream,
                "expected " + std::to_string(layout.block_count()) +
                    " blocks, got " + std::to_string(blocks.size()));
  }
  ImagePlane plane(layout.width, layout.height);
  for (std::size_t y = 0; y < layout.height; ++y) {
    const std::size_t by = y / kBlockDim;
    const std::size_t r = y % kBlockDim;
    for (std::size_t x = 0; x < layout.width; ++x) {
      const PixelBlock& block = blocks[by * layout.blocks_x() + x / kBlockDim];
      plane.at(x, y) = block(r, x % kBlockDim);
    }
  }
  return plane;
}

inline ShiftedBlock level_shift_forward(const PixelBlock& block) {
  ShiftedBlock out;
  for (std::size_t i = 0; i < kBlockSize; ++i) {
    out[i] = static_cast<double>(block[i]) - 128.0;
  }
  return out;
}

/// round, add 128, clamp to [0, 255].
inline PixelBlock level_shift_inverse(const ShiftedBlock& block) {
  PixelBlock out;
  for (std::size_t i = 0; i < kBlockSize; ++i) {
    const double v = round_half_away(block[i]) + 128.0;
    out[i] = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
  }
  return out;
}

}  // namespace bdc
