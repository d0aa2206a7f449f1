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

#include "bdc/codec.hpp"
#include "bdc/container.hpp"
#include "bdc/imageio.hpp"
#include "bdc/metrics.hpp"

namespace bdc {

/// One in-memory encode / serialize / decode cycle. The compressed size is
/// the exact BDC1 byte length; the original size is the raw raster.
inline CompressionReport roundtrip_report(const Image& image, int quality,
                                          Schedule schedule = Schedule::parallel()) {
  const CompressedImage compressed = encode(image, quality, schedule);
  const std::size_t file_bytes = serialize(compressed).size();
  const Image reconstructed = decode(compressed, schedule);
  return CompressionReport::make(raw_payload_size(image), file_bytes,
                                 mse_psnr(image, reconstructed));
}

}  // namespace bdc
