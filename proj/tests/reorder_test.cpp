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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "bdc/reorder.hpp"
#include "test_support.hpp"

namespace bdc {
namespace {

// Walks the anti-diagonals directly: even diagonals run bottom-left to
// top-right, odd ones top-right to bottom-left.
std::vector<std::size_t> walk_zigzag() {
  std::vector<std::size_t> order;
  for (std::size_t d = 0; d < 2 * kBlockDim - 1; ++d) {
    std::vector<std::size_t> diag;
    for (std::size_t r = 0; r < kBlockDim; ++r) {
      if (d >= r && d - r < kBlockDim) diag.push_back(r * kBlockDim + (d - r));
    }
    if (d % 2 == 0) std::reverse(diag.begin(), diag.end());
    order.insert(order.end(), diag.begin(), diag.end());
  }
  return order;
}

TEST(Zigzag, TableMatchesDiagonalWalk) {
  const auto walked = walk_zigzag();
  ASSERT_EQ(walked.size(), kBlockSize);
  for (std::size_t i = 0; i < kBlockSize; ++i) EXPECT_EQ(kZigzag[i], walked[i]) << i;
}

TEST(Zigzag, Examples) {
  QuantBlock dc;
  dc[0] = 5;
  const ZigzagVector v = zigzag(dc);
  EXPECT_EQ(v[0], 5);
  for (std::size_t i = 1; i < kBlockSize; ++i) EXPECT_EQ(v[i], 0);
  EXPECT_EQ(inverse_zigzag(v), dc);

  QuantBlock numbered;
  for (std::size_t i = 0; i < kBlockSize; ++i) numbered[i] = static_cast<std::int16_t>(i);
  const ZigzagVector scan = zigzag(numbered);
  EXPECT_EQ(scan[1], numbered(0, 1));
  EXPECT_EQ(scan[2], numbered(1, 0));
  EXPECT_EQ(scan[3], numbered(2, 0));
  EXPECT_EQ(scan[4], numbered(1, 1));
  EXPECT_EQ(scan[5], numbered(0, 2));
  EXPECT_EQ(std::set<std::int16_t>(scan.begin(), scan.end()).size(), kBlockSize);

  for (auto x : inverse_zigzag(ZigzagVector{})) EXPECT_EQ(x, 0);
}

TEST(Zigzag, RoundTrip) {
  auto gen = testing::rng(31);
  for (int i = 0; i < 1000; ++i) {
    const QuantBlock b = testing::random_quant(gen);
    ASSERT_EQ(inverse_zigzag(zigzag(b)), b);
  }
}

TEST(Zigzag, WrongLengthIsCorrupt) {
  const std::vector<std::int16_t> short_vec(63, 0);
  try {
    inverse_zigzag(short_vec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::corrupt_stream);
  }
}

const std::vector<int> kWorkedInput = {4, 0, 0, 0, 9, 0, 0, 0, 0, 1, 1, 0,
                                       0, 7, 5, 0, 0, 0, 0, 0, 0, 0, 32};
const std::vector<int> kWorkedOutput = {4, 0, 3, 9, 0, 4, 1, 1, 0, 2, 7, 5, 0, 7, 32};

TEST(Rle, WorkedExample) {
  EXPECT_EQ(rle_encode(kWorkedInput), kWorkedOutput);
  EXPECT_EQ(rle_decode(kWorkedOutput), kWorkedInput);
}

TEST(Rle, Examples) {
  const std::vector<int> dense = {3, -1, 7, 2};
  EXPECT_EQ(rle_encode(dense), dense);
  const std::vector<int> zeros(64, 0);
  EXPECT_EQ(rle_encode(zeros), (std::vector<int>{0, 64}));
  EXPECT_EQ(rle_decode(std::vector<int>{0, 64}), zeros);
  // A lone zero still becomes a pair.
  EXPECT_EQ(rle_encode(std::vector<int>{5, 0, 5}), (std::vector<int>{5, 0, 1, 5}));
}

TEST(Rle, SplitsRunsLongerThanSymbolRange) {
  const std::vector<std::int8_t> zeros(300, 0);
  const auto enc = rle_encode(zeros);
  EXPECT_EQ(enc, (std::vector<std::int8_t>{0, 127, 0, 127, 0, 46}));
  EXPECT_EQ(rle_decode(enc), zeros);
}

TEST(Rle, MalformedStreams) {
  const auto expect_corrupt = [](const std::vector<int>& s) {
    try {
      rle_decode(s);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::corrupt_stream);
    }
  };
  expect_corrupt({4, 0});
  expect_corrupt({0, 0});
  expect_corrupt({0, -3, 1});
}

TEST(Rle, DecodeLimit) {
  const std::vector<std::int16_t> big = {0, 64, 5};
  EXPECT_THROW(rle_decode(big, 64), Error);
  EXPECT_EQ(rle_decode(std::vector<std::int16_t>{0, 63, 5}, 64).size(), 64u);
}

TEST(Rle, RoundTripAndLengthBounds) {
  auto gen = testing::rng(32);
  std::uniform_int_distribution<std::size_t> len(1, 200);
  for (int i = 0; i < 2000; ++i) {
    const auto v = testing::zero_heavy(gen, i < 1000 ? kBlockSize : len(gen));
    const auto enc = rle_encode(v);
    ASSERT_EQ(rle_decode(enc), v);
    // Worst case is alternating isolated zeros: n + ceil(n / 2).
    ASSERT_LE(enc.size(), v.size() + (v.size() + 1) / 2);

    // Exact length: one symbol per non-zero plus a pair per maximal run.
    std::size_t zeros = 0;
    std::size_t runs = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      zeros += v[k] == 0;
      runs += v[k] == 0 && (k == 0 || v[k - 1] != 0);
    }
    ASSERT_EQ(enc.size(), v.size() - zeros + 2 * runs);
    if (runs == 1 && zeros >= 3) {
      ASSERT_LT(enc.size(), v.size());
    }
  }
  // A long run does not pay for isolated zeros elsewhere, and isolated
  // zeros can grow the stream by more than one symbol.
  EXPECT_EQ(rle_encode(std::vector<int>{0, 5, 0, 5, 0, 0, 0}).size(), 8u);
  EXPECT_EQ(rle_encode(std::vector<int>{0, 5, 0, 5, 0}).size(), 8u);
}

TEST(Rle, TrailingZeroBound) {
  // k non-zeros split the zeros into at most k + 1 runs of two symbols each,
  // so the stream never exceeds 3k + 2 symbols.
  auto gen = testing::rng(33);
  std::uniform_int_distribution<std::size_t> cut(1, 63);
  for (int i = 0; i < 1000; ++i) {
    auto v = testing::zero_heavy(gen, kBlockSize);
    std::fill(v.begin() + static_cast<std::ptrdiff_t>(cut(gen)), v.end(), 0);
    const auto nonzero = static_cast<std::size_t>(
        std::count_if(v.begin(), v.end(), [](auto x) { return x != 0; }));
    ASSERT_LE(rle_encode(v).size(), nonzero * 3 + 2);
  }
  // Isolated zeros between values reach the bound; 2k + 2 is not enough.
  EXPECT_EQ(rle_encode(std::vector<int>{0, 5, 0, 5, 0}).size(), 8u);
}

}  // namespace
}  // namespace bdc
