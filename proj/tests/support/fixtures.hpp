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

#pragma once

#include <array>
#include <string>
#include <string_view>

#include "antilat/antilat.hpp"

namespace fixtures {

  inline std::string path(std::string_view name) {
    return std::string(ANTILAT_FIXTURE_DIR) + "/" + std::string(name);
  }

  inline antilat::AlatFile load(std::string_view name) {
    return antilat::load_antilattice(path(name));
  }

  inline antilat::Antilattice antilattice(std::string_view name) {
    return load(name).antilattice;
  }

  inline antilat::CayFile cay(std::string_view name) {
    return antilat::parse_cay(antilat::read_text_file(path(name)));
  }

  inline antilat::Square square(std::string_view name) {
    return antilat::parse_square(antilat::read_text_file(path(name)));
  }

  /// Every fixture holding an antilattice.
  inline constexpr std::array<std::string_view, 12> antilattices{
      "durer.alat",        "loshu.alat",   "order43.alat",       "order43.cay",
      "order6_leech.alat", "order6_irreducible.alat", "order81.alat", "order169.alat",
      "trivial.alat",      "order2_ll.alat", "order9a.alat",     "order9b.alat"};

  /// Nontrivial congruences of the Durer antilattice as published, 1-based,
  /// with the block order and brackets as printed. In alpha2 the first block
  /// is printed starting "2,4,..."; 2 also starts the second block and 1 is
  /// missing, so the first entry is restored to 1.
  struct Named {
    std::string_view name;
    std::string_view partition;
  };

  inline constexpr std::array<Named, 21> durer_congruences{{
      {"alpha1", "[1,2,3,4,13,14,15,16|5,6,7,8,9,10,11,12]"},
      {"alpha2", "[1,4,5,8,9,12,13,16|2,3,6,7,10,11,14,15]"},
      {"alpha12", "[1,4,13,16|2,3,14,15|5,8,9,12|6,7,10,11]"},
      {"beta1", "[1,2,13,14|3,4,15,16|5,6,9,10|7,8,11,12]"},
      {"beta2", "[1,3,13,15|2,4,14,16|5,7,9,11|6,8,10,12]"},
      {"gamma1", "[1,4,5,8|2,3,6,7|9,12,13,16|10,11,14,15]"},
      {"gamma2", "[1,4,9,12|2,3,10,11|5,8,13,16|6,7,14,15]"},
      {"delta1", "[1,13|2,14|3,15|4,16|5,9|6,10|7,11|8,12]"},
      {"delta2", "[1,4|2,3|5,8|6,7|9,12|10,11|13,16|14,15]"},
      {"epsilon11", "[1,13|2,14|3,15|4,16|5|9|6|10|7|11|8|12]"},
      {"epsilon12", "[1|13|2|14|3|15|4|16|5,9|6,10|7,11|8,12]"},
      {"epsilon21", "[1,4|2|3|5,8|6|7|9,12|10|11|13,16|14|15]"},
      {"epsilon22", "[1|4|2,3|5|8|6,7|9|12|10,11|13|16|14,15]"},
      {"psi1", "[1,4,13,16|2,3,14,15|5,8|6,7|9,12|10,11]"},
      {"psi2", "[1,4,13,16|2,14|3,15|5,8,9,12|6,10|7,11]"},
      {"psi3", "[1,13|2,3,14,15|4,16|5,9|6,7,10,11|8,12]"},
      {"psi4", "[1,4|2,3|5,8,9,12|6,7,10,11|13,16|14,15]"},
      {"phi1", "[1,4,13,16|2,14|3,15|5,8|6|7|9,12|10|11]"},
      {"phi2", "[1|2,3|4|5,9|6,7,10,11|8,12|13|14,15|16]"},
      {"phi3", "[1,13|2,3,14,15|4,16|5|6,7|8|9|10,11|12]"},
      {"phi4", "[1,4|2|3|5,8,9,12|6,10|7,11|13,16|14|15]"},
  }};

}  // namespace fixtures
