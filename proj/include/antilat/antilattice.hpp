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

// Antilattices: double bands whose two reducts are rectangular bands. Any
// two generating matrices with the same number of cells, on the same
// carrier, define one.

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "antilat/cayley.hpp"
#include "antilat/error.hpp"
#include "antilat/rectband.hpp"

namespace antilat {

  class Antilattice {
   public:
    Antilattice() : meet_(GeneratingMatrix::normal(1, 1)), join_(meet_) {}

    Antilattice(GeneratingMatrix meet, GeneratingMatrix join)
        : meet_(std::move(meet)), join_(std::move(join)) {
      if (meet_.size() != join_.size()) {
        throw InvalidArgument("meet and join matrices are not compatible: "
                              + std::to_string(meet_.size()) + " vs "
                              + std::to_string(join_.size()) + " cells");
      }
    }

    static Antilattice trivial() {
      return Antilattice();
    }

    std::size_t size() const noexcept {
      return meet_.size();
    }

    GeneratingMatrix const& meet_matrix() const noexcept {
      return meet_;
    }
    GeneratingMatrix const& join_matrix() const noexcept {
      return join_;
    }

    Element meet(Element x, Element y) const {
      return meet_.product(x, y);
    }
    Element join(Element x, Element y) const {
      return join_.product(x, y);
    }

    Element apply(Operation op, Element x, Element y) const {
      return op == Operation::meet ? meet(x, y) : join(x, y);
    }

    GeneratingMatrix const& matrix(Operation op) const noexcept {
      return op == Operation::meet ? meet_ : join_;
    }

    /// Same antilattice with every element x renamed relabeling[x].
    Antilattice relabeled(std::span<Element const> relabeling) const {
      return Antilattice(meet_.relabeled(relabeling), join_.relabeled(relabeling));
    }

    friend bool operator==(Antilattice const&, Antilattice const&) = default;

   private:
    GeneratingMatrix meet_;
    GeneratingMatrix join_;
  };

  inline Antilattice antilattice_from_tables(CayleyTable const& meet,
                                             CayleyTable const& join) {
    if (meet.size() != join.size()) {
      throw InvalidArgument("meet and join tables have different orders");
    }
    auto reduct = [](CayleyTable const& t, Operation op) {
      if (!is_idempotent(t)) {
        throw NotABand(op, "not idempotent");
      }
      if (auto w = associativity_witness(t)) {
        throw NotABand(op,
                       "not associative at (" + std::to_string((*w)[0]) + ", "
                           + std::to_string((*w)[1]) + ", "
                           + std::to_string((*w)[2]) + ")");
      }
      auto g = extract_generating_matrix(t);
      if (!g) {
        throw NotRectangular(op, "generating matrix extraction failed");
      }
      return *g;
    };
    return Antilattice(reduct(meet, Operation::meet), reduct(join, Operation::join));
  }

  inline std::pair<CayleyTable, CayleyTable> tables_from_antilattice(Antilattice const& n) {
    return {band_from_generating_matrix(n.meet_matrix()),
            band_from_generating_matrix(n.join_matrix())};
  }

  /// True iff x(y v x v y)x = x under meet and x v (y x y) v x = x, for all
  /// x and y (juxtaposition is meet).
  inline bool is_quasilattice(CayleyTable const& meet, CayleyTable const& join) {
    if (meet.size() != join.size()) {
      throw InvalidArgument("meet and join tables have different orders");
    }
    if (!is_band(meet)) {
      throw NotABand(Operation::meet, "absorption is only checked on bands");
    }
    if (!is_band(join)) {
      throw NotABand(Operation::join, "absorption is only checked on bands");
    }
    for (Element x = 0; x < meet.size(); ++x) {
      for (Element y = 0; y < meet.size(); ++y) {
        auto const yxy_join = join(join(y, x), y);
        if (meet(meet(x, yxy_join), x) != x) {
          return false;
        }
        auto const yxy_meet = meet(meet(y, x), y);
        if (join(join(x, yxy_meet), x) != x) {
          return false;
        }
      }
    }
    return true;
  }

  struct AntilatticeType {
    std::size_t p = 1, q = 1, r = 1, s = 1;
    bool        meet_square = false;
    bool        join_square = false;
    bool        meet_flat   = false;
    bool        join_flat   = false;
    bool        square      = false;  // p = q = r = s
    bool        semisquare  = false;  // exactly one reduct square
    bool        flat        = false;  // both reducts flat
    bool        semiflat    = false;  // exactly one reduct flat

    friend bool operator==(AntilatticeType const&, AntilatticeType const&) = default;
  };

  inline AntilatticeType type_of(Antilattice const& n) {
    AntilatticeType t;
    t.p           = n.meet_matrix().rows();
    t.q           = n.meet_matrix().cols();
    t.r           = n.join_matrix().rows();
    t.s           = n.join_matrix().cols();
    t.meet_square = t.p == t.q;
    t.join_square = t.r == t.s;
    t.meet_flat   = t.p == 1 || t.q == 1;
    t.join_flat   = t.r == 1 || t.s == 1;
    t.square      = t.meet_square && t.join_square;
    t.semisquare  = t.meet_square != t.join_square;
    t.flat        = t.meet_flat && t.join_flat;
    t.semiflat    = t.meet_flat != t.join_flat;
    return t;
  }

  /// Relabels so the meet matrix is in normal form.
  inline Antilattice normalize(Antilattice const& n) {
    auto nf = to_normal_form(n.meet_matrix());
    return Antilattice(std::move(nf.matrix), n.join_matrix().relabeled(nf.relabeling));
  }

  /// Direct product; the pair (a, b) is encoded as a * |rhs| + b.
  inline Antilattice product(Antilattice const& lhs, Antilattice const& rhs) {
    return Antilattice(kronecker(lhs.meet_matrix(), rhs.meet_matrix()),
                       kronecker(lhs.join_matrix(), rhs.join_matrix()));
  }

  /// The flat antilattice of order n whose meet is left zero (or right zero
  /// when meet_left is false), and likewise for join.
  inline Antilattice flat_antilattice(std::size_t n, bool meet_left, bool join_left) {
    auto make = [n](bool left) {
      return left ? GeneratingMatrix::normal(n, 1) : GeneratingMatrix::normal(1, n);
    };
    return Antilattice(make(meet_left), make(join_left));
  }

  /// Calls f(Antilattice const&) on every antilattice of order n whose meet
  /// matrix is in normal form, as (shape of M) x (shape of J) x (arrangement
  /// of J). Every isomorphism class occurs, most of them several times.
  template <typename F>
  void for_each_antilattice(std::size_t n, F&& f) {
    std::vector<std::size_t> divisors;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d == 0) {
        divisors.push_back(d);
      }
    }
    std::vector<Element> arrangement(n);
    for (auto p : divisors) {
      auto const meet = GeneratingMatrix::normal(p, n / p);
      for (auto r : divisors) {
        std::iota(arrangement.begin(), arrangement.end(), Element(0));
        do {
          f(Antilattice(meet, GeneratingMatrix(r, n / r, arrangement)));
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
      }
    }
  }

}  // namespace antilat
