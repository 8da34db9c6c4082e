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

// Enumerates the congruences of an antilattice read from a file and prints
// the Hasse diagram as DOT.
//
//   congruence_lattice fixtures/durer.alat | dot -Tsvg > lattice.svg

#include <iostream>

#include "antilat/antilat.hpp"

int main(int argc, char** argv) {
  using namespace antilat;
  if (argc != 2) {
    std::cerr << "usage: congruence_lattice FILE\n";
    return 2;
  }
  try {
    auto const file = load_antilattice(argv[1]);
    auto const lat  = all_congruences(file.antilattice);
    std::cerr << lat.size() << " congruences, " << lat.atoms.size() << " atoms, "
              << lat.coatoms.size() << " coatoms\n";
    for (auto i : lat.atoms) {
      auto const q = quotient(file.antilattice, lat.elements[i]);
      std::cerr << "  atom [" << lat.elements[i].partition.to_string(file.base)
                << "], quotient of order " << q.antilattice.size() << '\n';
    }
    std::cout << lattice_to_dot(lat, file.base);
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
