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

#include <vector>

#include "antilat/antilattice.hpp"
#include "antilat/congruence.hpp"
#include "antilat/partition.hpp"

namespace antilat {

  /// Which of Green's L and R relations of the two reducts are congruences
  /// of the whole antilattice. In a rectangular band L relates elements in
  /// the same column of the generating matrix and R those in the same row.
  struct RegularityReport {
    bool meet_l  = false;
    bool meet_r  = false;
    bool join_l  = false;
    bool join_r  = false;
    bool regular = false;
  };

  inline Partition row_partition(GeneratingMatrix const& g) {
    std::vector<std::size_t> label(g.size());
    for (Element e = 0; e < g.size(); ++e) {
      label[e] = g.row_of(e);
    }
    return Partition::from_labels(label);
  }

  inline Partition col_partition(GeneratingMatrix const& g) {
    std::vector<std::size_t> label(g.size());
    for (Element e = 0; e < g.size(); ++e) {
      label[e] = g.col_of(e);
    }
    return Partition::from_labels(label);
  }

  inline RegularityReport regularity(Antilattice const& n) {
    RegularityReport r;
    r.meet_l  = is_congruence(n, col_partition(n.meet_matrix())).has_value();
    r.meet_r  = is_congruence(n, row_partition(n.meet_matrix())).has_value();
    r.join_l  = is_congruence(n, col_partition(n.join_matrix())).has_value();
    r.join_r  = is_congruence(n, row_partition(n.join_matrix())).has_value();
    r.regular = r.meet_l && r.meet_r && r.join_l && r.join_r;
    return r;
  }

}  // namespace antilat
