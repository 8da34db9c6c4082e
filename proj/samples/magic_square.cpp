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

// Builds the 3x3 magic square from a pair of orthogonal Latin squares, turns
// it into an antilattice and prints a few of its properties.

#include <iostream>

#include "antilat/antilat.hpp"

int main() {
  using namespace antilat;

  auto const pair   = generate_mols(3);
  auto const square = choi_euler(pair);
  std::cout << format_square(square);
  std::cout << "semimagic: " << std::boolalpha << is_semimagic(square) << '\n';

  auto const n = latin_antilattice_from_mols(pair);
  std::cout << format_alat({1, n});
  std::cout << "odd: " << is_odd(n) << ", simple: " << is_simple(n)
            << ", elementary: " << is_elementary(n) << '\n';

  // Reading the square back gives the same pair.
  auto const back = decompose_to_mols(square);
  std::cout << "round trip: " << (back.first() == pair.first() && back.second() == pair.second())
            << '\n';
}
