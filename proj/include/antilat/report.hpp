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

#include <cstddef>
#include <optional>

#include "antilat/antilattice.hpp"
#include "antilat/congruence.hpp"
#include "antilat/latin.hpp"
#include "antilat/regularity.hpp"

namespace antilat {

  struct ClassifyOptions {
    std::size_t max_order            = default_max_order;
    bool        exhaustive_semimagic = false;
    std::size_t semimagic_max_order  = default_semimagic_max_order;
    unsigned    threads              = 1;
  };

  /// Every class membership of one antilattice. An empty optional means the
  /// predicate was skipped (order guard or not requested).
  struct ClassificationReport {
    std::size_t      order = 0;
    AntilatticeType  type;
    bool             quasilattice           = false;
    bool             odd                    = false;
    bool             latin                  = false;
    bool             semimagic_presentation = false;
    std::optional<bool> semimagic_exhaustive;
    bool             magic_presentation = false;
    RegularityReport regularity;
    std::optional<bool>        simple;
    std::optional<bool>        irreducible;
    bool                       elementary = false;
    std::optional<std::size_t> congruence_count;
    std::size_t                even_edge_count = 0;

    bool any_skipped(ClassifyOptions const& opt) const {
      return !simple || !irreducible || !congruence_count
             || (opt.exhaustive_semimagic && !semimagic_exhaustive);
    }
  };

  inline ClassificationReport classify(Antilattice const& n, ClassifyOptions const& opt = {}) {
    ClassificationReport r;
    r.order = n.size();
    r.type  = type_of(n);
    {
      auto const [meet, join] = tables_from_antilattice(n);
      r.quasilattice          = is_quasilattice(meet, join);
    }
    r.odd                    = is_odd(n);
    r.latin                  = is_latin_antilattice(n);
    r.semimagic_presentation = is_semimagic_antilattice(n);
    if (opt.exhaustive_semimagic && n.size() <= opt.semimagic_max_order) {
      r.semimagic_exhaustive = is_semimagic_antilattice(n, true, opt.semimagic_max_order);
    }
    r.magic_presentation = is_magic_antilattice(n);
    r.regularity         = regularity(n);
    r.elementary         = is_elementary(n);
    r.even_edge_count    = even_graph(n).edges.size();
    if (n.size() <= opt.max_order) {
      r.simple = is_simple(n, opt.threads);
      if (*r.simple) {
        // Only identity and universal, and those two are never a factor pair.
        r.congruence_count = n.size() <= 1 ? 1 : 2;
        r.irreducible      = true;
      } else {
        auto const lattice = all_congruences(n, opt.max_order);
        r.congruence_count = lattice.size();
        r.irreducible      = !find_factor_pair(lattice).has_value();
      }
    }
    return r;
  }

}  // namespace antilat
