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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bdc {

enum class Errc {
  invalid_input,
  unsupported_size,
  invalid_quality,
  encode_range,
  corrupt_stream,
  dimension_mismatch,
  bad_magic,
  unsupported_version,
  truncated_file,
  malformed_block,
  serialization,
  bad_header,
  unsupported_maxval,
  truncated_pixels,
  io,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_input: return "invalid-input";
    case Errc::unsupported_size: return "unsupported-size";
    case Errc::invalid_quality: return "invalid-quality";
    case Errc::encode_range: return "encode-range";
    case Errc::corrupt_stream: return "corrupt-stream";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::bad_magic: return "bad-magic";
    case Errc::unsupported_version: return "unsupported-version";
    case Errc::truncated_file: return "truncated-file";
    case Errc::malformed_block: return "malformed-block";
    case Errc::serialization: return "serialization";
    case Errc::bad_header: return "bad-header";
    case Errc::unsupported_maxval: return "unsupported-maxval";
    case Errc::truncated_pixels: return "truncated-pixels";
    case Errc::io: return "io";
  }
  return "unknown";
}

/// Every failure in the library is reported as an Error carrying a
/// machine-checkable code. Parsers also attach the byte offset at which
/// the input stopped making sense.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what,
        std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(format(code, what, offset)),
        code_(code),
        offset_(offset) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  static std::string format(Errc code, const std::string& what,
                            std::optional<std::size_t> offset) {
    std::string s{to_string(code)};
    s += ": ";
    s += what;
    if (offset) {
      s += " (at byte offset ";
      s += std::to_string(*offset);
      s += ")";
    }
    return s;
  }

  Errc code_;
  std::optional<std::size_t> offset_;
};

}  // namespace bdc
