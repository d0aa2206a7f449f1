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
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bdc/codec.hpp"
#include "bdc/error.hpp"
#include "bdc/quantization.hpp"
#include "bdc/reorder.hpp"

// BDC1 layout, all integers little-endian:
//
//   offset  size  field
//   0       4     magic "BDC1"
//   4       1     version (1)
//   5       4     width  (u32)
//   9       4     height (u32)
//   13      1     channels (1 or 3)
//   14      1     quality (1..100)
//   15      ...   for each channel, for each block in row-major order:
//                   u16 symbol count, then count x i16 symbols

namespace bdc {

inline constexpr std::array<std::uint8_t, 4> kMagic = {'B', 'D', 'C', '1'};
inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::size_t kHeaderSize = 15;

namespace detail {

class ByteWriter {
 public:
  void u8(std::uint8_t v) { bytes_.push_back(v); }
  void u16(std::uint16_t v) {
    bytes_.push_back(static_cast<std::uint8_t>(v & 0xff));
    bytes_.push_back(static_cast<std::uint8_t>(v >> 8));
  }
  void i16(std::int16_t v) { u16(static_cast<std::uint16_t>(v)); }
  void u32(std::uint32_t v) {
    for (int shift = 0; shift < 32; shift += 8) {
      bytes_.push_back(static_cast<std::uint8_t>((v >> shift) & 0xff));
    }
  }
  void reserve(std::size_t n) { bytes_.reserve(n); }
  std::vector<std::uint8_t> take() { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t offset() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }

  std::uint8_t u8(const char* what) {
    need(1, what);
    return bytes_[pos_++];
  }
  std::uint16_t u16(const char* what) {
    need(2, what);
    const auto v = static_cast<std::uint16_t>(bytes_[pos_] | (bytes_[pos_ + 1] << 8));
    pos_ += 2;
    return v;
  }
  std::int16_t i16(const char* what) { return static_cast<std::int16_t>(u16(what)); }
  std::uint32_t u32(const char* what) {
    need(4, what);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      v |= static_cast<std::uint32_t>(bytes_[pos_ + i]) << (8 * i);
    }
    pos_ += 4;
    return v;
  }

 private:
  void need(std::size_t n, const char* what) const {
    if (remaining() < n) {
      throw Error(Errc::truncated_file,
                  std::string("file ends inside ") + what, pos_);
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Exact size of the serialized form.
inline std::size_t serialized_size(const CompressedImage& c) {
  std::size_t n = kHeaderSize;
  for (const auto& channel : c.streams) {
    for (const BlockStream& s : channel) n += 2 + 2 * s.size();
  }
  return n;
}

inline std::vector<std::uint8_t> serialize(const CompressedImage& c) {
  if (c.channels != 1 && c.channels != 3) {
    throw Error(Errc::serialization, "channel count must be 1 or 3");
  }
  if (!valid_quality(c.quality)) {
    throw Error(Errc::serialization, "quality outside [1, 100]");
  }
  const TileLayout layout = c.layout();
  if (c.streams.size() != c.channels) {
    throw Error(Errc::serialization, "stream set count does not match channels");
  }

  detail::ByteWriter out;
  out.reserve(serialized_size(c));
  for (std::uint8_t m : kMagic) out.u8(m);
  out.u8(kFormatVersion);
  out.u32(c.width);
  out.u32(c.height);
  out.u8(c.channels);
  out.u8(c.quality);

  for (const auto& channel : c.streams) {
    if (channel.size() != layout.block_count()) {
      throw Error(Errc::serialization, "block count does not match dimensions");
    }
    for (const BlockStream& s : channel) {
      if (s.size() > UINT16_MAX) {
        throw Error(Errc::serialization,
                    "block stream of " + std::to_string(s.size()) +
                        " symbols exceeds 16-bit count");
      }
      out.u16(static_cast<std::uint16_t>(s.size()));
      for (std::int16_t sym : s) out.i16(sym);
    }
  }
  return out.take();
}

/// Parses and fully validates a BDC1 byte sequence. Every failure is a
/// bdc::Error with a distinct code and the byte offset of the problem.
inline CompressedImage deserialize(std::span<const std::uint8_t> bytes) {
  detail::ByteReader in(bytes);

  for (std::size_t i = 0; i < kMagic.size(); ++i) {
    if (in.u8("magic") != kMagic[i]) {
      throw Error(Errc::bad_magic, "not a BDC1 file", i);
    }
  }
  const std::size_t version_at = in.offset();
  if (const std::uint8_t version = in.u8("version"); version != kFormatVersion) {
    throw Error(Errc::unsupported_version,
                "format version " + std::to_string(version), version_at);
  }

  CompressedImage c;
  const std::size_t width_at = in.offset();
  c.width = in.u32("width");
  const std::size_t height_at = in.offset();
  c.height = in.u32("height");
  const std::size_t channels_at = in.offset();
  c.channels = in.u8("channels");
  const std::size_t quality_at = in.offset();
  c.quality = in.u8("quality");

  if (c.width == 0) throw Error(Errc::bad_header, "zero width", width_at);
  if (c.height == 0) throw Error(Errc::bad_header, "zero height", height_at);
  if (c.channels != 1 && c.channels != 3) {
    throw Error(Errc::bad_header,
                "channel count " + std::to_string(c.channels), channels_at);
  }
  if (!valid_quality(c.quality)) {
    throw Error(Errc::bad_header, "quality " + std::to_string(c.quality),
                quality_at);
  }

  const std::size_t blocks = c.layout().block_count();
  // The smallest legal block ([0, 64]) takes 6 bytes.
  const std::size_t plausible = in.remaining() / 6 + 1;
  c.streams.resize(c.channels);
  for (auto& channel : c.streams) {
    channel.reserve(blocks < plausible ? blocks : plausible);
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::size_t block_at = in.offset();
      const std::uint16_t count = in.u16("block symbol count");
      BlockStream s(count);
      for (auto& sym : s) sym = in.i16("block symbols");
      try {
        const auto values = rle_decode(std::span<const std::int16_t>(s), kBlockSize);
        if (values.size() != kBlockSize) {
          throw Error(Errc::corrupt_stream,
                      "decodes to " + std::to_string(values.size()) + " values");
        }
      } catch (const Error& e) {
        throw Error(Errc::malformed_block,
                    "block " + std::to_string(b) + ": " + e.what(), block_at);
      }
      channel.push_back(std::move(s));
    }
  }
  if (in.remaining() != 0) {
    throw Error(Errc::malformed_block,
                std::to_string(in.remaining()) + " trailing bytes after last block",
                in.offset());
  }
  return c;
}

}  // namespace bdc
