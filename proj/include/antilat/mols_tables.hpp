// Copyright 2026 The antilat Authors
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

// Precomputed seeds for the MOLS generator. Every table is re-verified when
// it is expanded, so a corrupted entry surfaces as an exception.

#pragma once

#include <array>
#include <cstddef>
#include <span>

namespace antilat::mols_tables {

  /// Orthogonal mates of the xor square (i ^ j) + 1 of sides 4 and 8.
  inline constexpr std::array<int, 16> side4{1, 2, 3, 4, 3, 4, 1, 2,
                                             4, 3, 2, 1, 2, 1, 4, 3};

  inline constexpr std::array<int, 64> side8{
      1, 2, 3, 4, 5, 6, 7, 8, 3, 4, 1, 2, 7, 8, 5, 6, 5, 6, 7, 8, 1, 2,
      3, 4, 7, 8, 5, 6, 3, 4, 1, 2, 4, 3, 2, 1, 8, 7, 6, 5, 2, 1, 4, 3,
      6, 5, 8, 7, 8, 7, 6, 5, 4, 3, 2, 1, 6, 5, 8, 7, 2, 1, 4, 3};

  /// Quasi-difference matrices over Z_m with three points at infinity:
  /// 4 rows of m + 6 columns, row-major, -1 for a blank. Row r is blank in
  /// columns m - 6 + 3r .. m - 4 + 3r. For any two rows the differences over
  /// the columns where both are defined cover Z_m once.
  struct Qdm {
    std::size_t          m;
    std::span<int const> entries;
  };

  inline constexpr std::array<int, 4 * 13> qdm7{
      0, -1, -1, -1, 0,  0,  0,  0,  0,  0, 0,  0,  0,   //
      4, 0,  0,  0,  -1, -1, -1, 6,  0,  3, 1,  2,  5,   //
      1, 5,  3,  1,  0,  6,  5,  -1, -1, -1, 3, 2,  4,   //
      6, 6,  3,  5,  2,  5,  1,  3,  0,  4, -1, -1, -1};

  inline constexpr std::array<int, 4 * 17> qdm11{
      0,  0, 0, 0, 0,  -1, -1, -1, 0,  0,  0,  0,  0,  0,  0,  0,  0,   //
      0,  2, 6, 9, 3,  0,  0,  0,  -1, -1, -1, 1,  4,  8,  10, 5,  7,   //
      10, 4, 1, 5, 3,  5,  8,  9,  0,  7,  6,  -1, -1, -1, 2,  9,  8,   //
      9,  2, 3, 8, 10, 5,  2,  6,  6,  0,  7,  4,  5,  1,  -1, -1, -1};

  inline constexpr std::array<int, 4 * 21> qdm15{
      0,  0,  0,  0, 0, 0,  0,  0,  0, -1, -1, -1, 0,  0,  0,  0,  0,  0,  0,  0,  0,   //
      12, 14, 3,  0, 7, 6,  10, 1,  8, 0,  0,  0,  -1, -1, -1, 2,  11, 13, 4,  5,  9,   //
      10, 5,  12, 8, 7, 2,  13, 0,  3, 7,  2,  4,  11, 9,  4,  -1, -1, -1, 1,  6,  14,  //
      8,  5,  3,  2, 4, 13, 0,  10, 7, 8,  10, 3,  14, 1,  9,  6,  12, 11, -1, -1, -1};

  inline constexpr std::array<int, 4 * 25> qdm19{
      0,  0,  0,  0,  0, 0,  0,  0,  0,  0,  0,  0,  0,  -1, -1, -1, 0,  0,  0,  0,  0,  0,  0,  0,  0,   //
      4,  1,  2,  10, 14, 12, 13, 0,  16, 5, 8,  15, 17, 0,  0,  0,  -1, -1, -1, 11, 18, 7,  3,  9,  6,   //
      16, 1,  13, 12, 4, 0,  8,  17, 7,  18, 11, 14, 6,  5,  1,  16, 3,  2,  15, -1, -1, -1, 9,  5,  10,  //
      18, 17, 13, 16, 2, 5,  4,  9,  15, 8,  6,  1,  0,  15, 13, 0,  10, 3,  14, 12, 7,  11, -1, -1, -1};

  inline constexpr std::array<int, 4 * 29> qdm23{
      0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  -1, -1, -1, 0,  0,  0,  0,  0,  0,  0,  0,  0,   //
      22, 5,  4,  14, 7,  12, 20, 2,  15, 21, 17, 0,  19, 18, 6,  9,  8,  0,  0,  0,  -1, -1, -1, 16, 10, 3,  13, 11, 1,   //
      5,  14, 12, 10, 6,  15, 1,  9,  7,  16, 18, 20, 17, 0,  19, 21, 2,  2,  14, 11, 22, 3,  8,  -1, -1, -1, 13, 4,  11,  //
      6,  13, 20, 14, 17, 11, 10, 4,  19, 22, 0,  18, 8,  16, 3,  1,  2,  19, 11, 3,  9,  5,  21, 7,  15, 12, -1, -1, -1};

  inline constexpr std::array<Qdm, 5> qdms{{{7, qdm7},
                                            {11, qdm11},
                                            {15, qdm15},
                                            {19, qdm19},
                                            {23, qdm23}}};

}  // namespace antilat::mols_tables
