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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "bdc/bdc.hpp"

namespace bdc::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline ShiftedBlock random_shifted(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> dist(-128, 127);
  ShiftedBlock b;
  for (double& v : b) v = dist(gen);
  return b;
}

inline ShiftedBlock random_real_block(std::mt19937_64& gen, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  ShiftedBlock b;
  for (double& v : b) v = dist(gen);
  return b;
}

inline QuantBlock random_quant(std::mt19937_64& gen, int magnitude = 2000) {
  std::uniform_int_distribution<int> dist(-magnitude, magnitude);
  QuantBlock b;
  for (auto& v : b) v = static_cast<std::int16_t>(dist(gen));
  return b;
}

/// Mostly zeros, the shape real quantized scans have.
inline std::vector<std::int16_t> zero_heavy(std::mt19937_64& gen, std::size_t n) {
  std::bernoulli_distribution nonzero(0.2);
  std::uniform_int_distribution<int> value(-300, 300);
  std::vector<std::int16_t> out(n, 0);
  for (auto& v : out) {
    if (nonzero(gen)) {
      int x = 0;
      while (x == 0) x = value(gen);
      v = static_cast<std::int16_t>(x);
    }
  }
  return out;
}

inline ImagePlane random_plane(std::mt19937_64& gen, std::size_t w, std::size_t h) {
  std::uniform_int_distribution<int> dist(0, 255);
  ImagePlane p(w, h);
  for (auto& s : p.samples()) s = static_cast<std::uint8_t>(dist(gen));
  return p;
}

inline Image random_image(std::mt19937_64& gen, std::size_t w, std::size_t h,
                          std::size_t channels) {
  std::vector<ImagePlane> planes;
  for (std::size_t c = 0; c < channels; ++c) planes.push_back(random_plane(gen, w, h));
  return Image(std::move(planes));
}

/// Smooth synthetic content: a gradient plus low-frequency ripples.
inline Image smooth_image(std::size_t w, std::size_t h, std::size_t channels) {
  std::vector<ImagePlane> planes;
  for (std::size_t c = 0; c < channels; ++c) {
    ImagePlane p(w, h);
    for (std::size_t y = 0; y < h; ++y) {
      for (std::size_t x = 0; x < w; ++x) {
        const double v = 128.0 + 60.0 * std::sin(0.05 * x + 0.3 * c) +
                         40.0 * std::cos(0.07 * y) + 0.05 * (x + y);
        p.at(x, y) = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
      }
    }
    planes.push_back(std::move(p));
  }
  return Image(std::move(planes));
}

inline std::vector<std::uint8_t> slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::filesystem::path data_dir() { return BDC_TEST_DATA_DIR; }

/// The natural grayscale photographs under tests/data.
inline std::vector<std::filesystem::path> corpus_paths() {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir())) {
    if (entry.path().extension() == ".pgm") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Image load_image(const std::filesystem::path& path) {
  return read_image(slurp(path));
}

inline int max_abs_diff(const Image& a, const Image& b) {
  int worst = 0;
  for (std::size_t c = 0; c < a.channels(); ++c) {
    const auto sa = a.plane(c).samples();
    const auto sb = b.plane(c).samples();
    for (std::size_t i = 0; i < sa.size(); ++i) {
      worst = std::max(worst, std::abs(int{sa[i]} - int{sb[i]}));
    }
  }
  return worst;
}

}  // namespace bdc::testing
