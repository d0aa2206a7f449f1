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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bdc/core.hpp"
#include "bdc/error.hpp"
#include "bdc/parallel.hpp"
#include "bdc/quantization.hpp"
#include "bdc/reorder.hpp"
#include "bdc/transform.hpp"

namespace bdc {

/// Grayscale (1 plane) or color (3 planes). Color channels are coded as
/// independent planes with the same table.
class Image {
 public:
  Image() = default;

  explicit Image(std::vector<ImagePlane> planes) : planes_(std::move(planes)) {
    if (planes_.size() != 1 && planes_.size() != 3) {
      throw Error(Errc::invalid_input,
                  "image must have 1 or 3 channels, got " +
                      std::to_string(planes_.size()));
    }
    for (const ImagePlane& p : planes_) {
      if (p.width() == 0 || p.height() == 0) {
        throw Error(Errc::invalid_input, "image dimensions must be >= 1x1");
      }
      if (p.width() != planes_[0].width() || p.height() != planes_[0].height()) {
        throw Error(Errc::dimension_mismatch, "channel planes differ in size");
      }
    }
  }

  static Image uniform(std::size_t width, std::size_t height,
                       std::size_t channels, std::uint8_t value) {
    return Image(std::vector<ImagePlane>(channels, ImagePlane(width, height, value)));
  }

  std::size_t width() const noexcept { return planes_.empty() ? 0 : planes_[0].width(); }
  std::size_t height() const noexcept { return planes_.empty() ? 0 : planes_[0].height(); }
  std::size_t channels() const noexcept { return planes_.size(); }
  std::size_t sample_count() const noexcept { return width() * height() * channels(); }

  const ImagePlane& plane(std::size_t c) const { return planes_.at(c); }
  ImagePlane& plane(std::size_t c) { return planes_.at(c); }
  const std::vector<ImagePlane>& planes() const noexcept { return planes_; }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::vector<ImagePlane> planes_;
};

/// Run-length symbols for one block; decodes to exactly 64 levels.
using BlockStream = std::vector<std::int16_t>;

struct CompressedImage {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint8_t channels = 0;
  std::uint8_t quality = 0;
  /// streams[channel][block], blocks in row-major order.
  std::vector<std::vector<BlockStream>> streams;

  TileLayout layout() const { return TileLayout::for_size(width, height); }

  friend bool operator==(const CompressedImage&, const CompressedImage&) = default;
};

inline BlockStream encode_block(const PixelBlock& block, const QuantMatrix& q) {
  const QuantBlock levels = quantize(dct_forward(level_shift_forward(block)), q);
  const ZigzagVector scan = zigzag(levels);
  return rle_encode(std::span<const std::int16_t>(scan));
}

inline PixelBlock decode_block(std::span<const std::int16_t> stream,
                               const QuantMatrix& q) {
  const std::vector<std::int16_t> scan = rle_decode(stream, kBlockSize);
  if (scan.size() != kBlockSize) {
    throw Error(Errc::corrupt_stream,
                "block stream decodes to " + std::to_string(scan.size()) +
                    " values, expected 64");
  }
  const QuantBlock levels = inverse_zigzag(scan);
  return level_shift_inverse(dct_inverse(dequantize(levels, q)));
}

/// Forward pipeline. Output is identical for every schedule.
inline CompressedImage encode(const Image& image, int quality,
                              Schedule schedule = Schedule::parallel()) {
  const QuantMatrix q = scale_quality(quality);
  if (image.channels() != 1 && image.channels() != 3) {
    throw Error(Errc::invalid_input, "image must have 1 or 3 channels");
  }
  if (image.width() > UINT32_MAX || image.height() > UINT32_MAX) {
    throw Error(Errc::invalid_input, "image dimensions exceed 32 bits");
  }

  CompressedImage out;
  out.width = static_cast<std::uint32_t>(image.width());
  out.height = static_cast<std::uint32_t>(image.height());
  out.channels = static_cast<std::uint8_t>(image.channels());
  out.quality = static_cast<std::uint8_t>(quality);
  out.streams.resize(image.channels());

  for (std::size_t c = 0; c < image.channels(); ++c) {
    const Tiling tiling = tile_plane(image.plane(c));
    auto& streams = out.streams[c];
    streams.resize(tiling.blocks.size());
    parallel_for(tiling.blocks.size(), schedule, [&](std::size_t b) {
      streams[b] = encode_block(tiling.blocks[b], q);
    });
  }
  return out;
}

/// Inverse pipeline. Fails on the first malformed block (lowest channel,
/// then lowest block index) regardless of schedule.
inline Image decode(const CompressedImage& compressed,
                    Schedule schedule = Schedule::parallel()) {
  if (compressed.channels != 1 && compressed.channels != 3) {
    throw Error(Errc::invalid_input, "channel count must be 1 or 3");
  }
  const QuantMatrix q = scale_quality(compressed.quality);
  const TileLayout layout = compressed.layout();
  if (compressed.streams.size() != compressed.channels) {
    throw Error(Errc::dimension_mismatch,
                "container has " + std::to_string(compressed.streams.size()) +
                    " channel stream sets for " +
                    std::to_string(compressed.channels) + " channels");
  }

  std::vector<ImagePlane> planes;
  planes.reserve(compressed.channels);
  for (std::size_t c = 0; c < compressed.channels; ++c) {
    const auto& streams = compressed.streams[c];
    if (streams.size() != layout.block_count()) {
      throw Error(Errc::dimension_mismatch,
                  "channel " + std::to_string(c) + " has " +
                      std::to_string(streams.size()) + " blocks, expected " +
                      std::to_string(layout.block_count()));
    }
    std::vector<PixelBlock> blocks(streams.size());
    parallel_for(streams.size(), schedule, [&](std::size_t b) {
      try {
        blocks[b] = decode_block(streams[b], q);
      } catch (const Error& e) {
        throw Error(e.code(), "channel " + std::to_string(c) + " block " +
                                  std::to_string(b) + ": " + e.what());
      }
    });
    planes.push_back(untile_plane(blocks, layout));
  }
  return Image(std::move(planes));
}

}  // namespace bdc
