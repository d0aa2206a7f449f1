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

#include "bdc/codec.hpp"
#include "bdc/error.hpp"

// Binary netpbm: P5 (grayscale) and P6 (RGB), maxval 255 only.

namespace bdc {

namespace detail {

class NetpbmHeaderParser {
 public:
  explicit NetpbmHeaderParser(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t offset() const noexcept { return pos_; }

  // Skips whitespace and '#' comments running to end of line.
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const std::uint8_t ch = bytes_[pos_];
      if (ch == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (is_space(ch)) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::size_t number(const char* what) {
    skip_separators();
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      if (pos_ - start >= 9) {
        throw Error(Errc::bad_header, std::string(what) + " is too large", start);
      }
      v = v * 10 + (bytes_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) {
      throw Error(Errc::bad_header, std::string("expected ") + what, start);
    }
    return v;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void raster_separator() {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) {
      throw Error(Errc::bad_header, "expected whitespace before raster", pos_);
    }
    ++pos_;
  }

 private:
  static bool is_space(std::uint8_t ch) {
    return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\v' ||
           ch == '\f';
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Image read_image(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6')) {
    throw Error(Errc::bad_header, "not a binary PGM (P5) or PPM (P6) file", 0);
  }
  const std::size_t channels = bytes[1] == '5' ? 1 : 3;

  detail::NetpbmHeaderParser header(bytes.subspan(2));
  const std::size_t width = header.number("width");
  const std::size_t height = header.number("height");
  const std::size_t maxval_at = header.offset() + 2;
  const std::size_t maxval = header.number("maxval");
  if (width == 0 || height == 0) {
    throw Error(Errc::bad_header, "zero image dimension", 2);
  }
  if (maxval != 255) {
    throw Error(Errc::unsupported_maxval,
                "maxval " + std::to_string(maxval) + " (only 255 supported)",
                maxval_at);
  }
  header.raster_separator();

  const std::size_t raster_at = header.offset() + 2;
  const std::size_t available = bytes.size() - raster_at;
  // Division form first so width * height * channels cannot overflow.
  if (height > available / width / channels) {
    throw Error(Errc::truncated_pixels,
                "raster needs " + std::to_string(width) + "x" +
                    std::to_string(height) + "x" + std::to_string(channels) +
                    " bytes, file has " + std::to_string(available),
                bytes.size());
  }
  const std::size_t needed = width * height * channels;

  const auto raster = bytes.subspan(raster_at, needed);
  std::vector<ImagePlane> planes(channels, ImagePlane(width, height));
  for (std::size_t i = 0; i < width * height; ++i) {
    for (std::size_t c = 0; c < channels; ++c) {
      planes[c].samples()[i] = raster[i * channels + c];
    }
  }
  return Image(std::move(planes));
}

/// Canonical form: "P5\n<w> <h>\n255\n" (or P6) followed by the raster,
/// RGB interleaved for color.
inline std::vector<std::uint8_t> write_image(const Image& image) {
  if (image.channels() != 1 && image.channels() != 3) {
    throw Error(Errc::invalid_input, "image must have 1 or 3 channels");
  }
  const std::string header = std::string(image.channels() == 1 ? "P5" : "P6") +
                             "\n" + std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const std::size_t pixels = image.width() * image.height();
  out.reserve(out.size() + pixels * image.channels());
  for (std::size_t i = 0; i < pixels; ++i) {
    for (std::size_t c = 0; c < image.channels(); ++c) {
      out.push_back(image.plane(c).samples()[i]);
    }
  }
  return out;
}

/// Size of the raw raster, the uncompressed reference size for reports.
inline std::size_t raw_payload_size(const Image& image) { return image.sample_count(); }

}  // namespace bdc
