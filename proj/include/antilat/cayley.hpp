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

// Finite magmas given by Cayley tables, and the band-theoretic predicates
// and relations on them: associativity, idempotence, Green's relations, the
// natural preorder and partial order, and the quotient by Green's D.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antilat/error.hpp"
#include "antilat/partition.hpp"

namespace antilat {

  /// An n x n operation table over the elements 0, ..., n - 1.
  class CayleyTable {
   public:
    CayleyTable() = default;

    CayleyTable(std::size_t n, std::vector<Element> entries)
        : n_(n), entries_(std::move(entries)) {
      if (n_ == 0) {
        throw InvalidArgument("a Cayley table needs at least one element");
      }
      if (entries_.size() != n_ * n_) {
        throw InvalidArgument("a Cayley table of order " + std::to_string(n_)
                              + " needs " + std::to_string(n_ * n_)
                              + " entries, got "
                              + std::to_string(entries_.size()));
      }
      for (auto e : entries_) {
        if (e >= n_) {
          throw InvalidArgument("Cayley table entry " + std::to_string(e)
                                + " is out of range [0, " + std::to_string(n_)
                                + ")");
        }
      }
    }

    CayleyTable(std::vector<std::vector<Element>> const& rows)
        : CayleyTable(rows.size(), flatten(rows)) {}

    /// Table of x * y = f(x, y).
    template <typename F>
    static CayleyTable from_function(std::size_t n, F&& f) {
      std::vector<Element> entries(n * n);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          entries[x * n + y] = f(x, y);
        }
      }
      return CayleyTable(n, std::move(entries));
    }

    static CayleyTable left_zero(std::size_t n) {
      return from_function(n, [](Element x, Element) { return x; });
    }

    static CayleyTable right_zero(std::size_t n) {
      return from_function(n, [](Element, Element y) { return y; });
    }

    std::size_t size() const noexcept {
      return n_;
    }

    Element operator()(Element x, Element y) const {
      return entries_[x * n_ + y];
    }

    std::span<Element const> row(Element x) const {
      return {entries_.data() + x * n_, n_};
    }

    std::vector<Element> const& entries() const noexcept {
      return entries_;
    }

    friend bool operator==(CayleyTable const&, CayleyTable const&) = default;

   private:
    static std::vector<Element>
    flatten(std::vector<std::vector<Element>> const& rows) {
      std::vector<Element> out;
      out.reserve(rows.size() * rows.size());
      for (auto const& r : rows) {
        if (r.size() != rows.size()) {
          throw InvalidArgument("Cayley table rows must all have length "
                                + std::to_string(rows.size()));
        }
        out.insert(out.end(), r.begin(), r.end());
      }
      return out;
    }

    std::size_t          n_ = 0;
    std::vector<Element> entries_;
  };

  /// First violation (xy)z != x(yz) of associativity.
  using AssociativityWitness = std::array<Element, 3>;

  inline std::optional<AssociativityWitness>
  associativity_witness(CayleyTable const& t) {
    auto const n = t.size();
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        auto const xy = t(x, y);
        for (Element z = 0; z < n; ++z) {
          if (t(xy, z) != t(x, t(y, z))) {
            return AssociativityWitness{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_associative(CayleyTable const& t) {
    return !associativity_witness(t).has_value();
  }

  inline bool is_idempotent(CayleyTable const& t) {
    for (Element x = 0; x < t.size(); ++x) {
      if (t(x, x) != x) {
        return false;
      }
    }
    return true;
  }

  inline bool is_commutative(CayleyTable const& t) {
    for (Element x = 0; x < t.size(); ++x) {
      for (Element y = x + 1; y < t.size(); ++y) {
        if (t(x, y) != t(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  struct MagmaFlags {
    bool associative = false;
    bool idempotent  = false;
    bool commutative = false;
    bool band        = false;
    bool semilattice = false;
    bool rectangular = false;

    friend bool operator==(MagmaFlags const&, MagmaFlags const&) = default;
  };

  /// Classifies t. The rectangular flag uses the quadratic xyx = x test.
  inline MagmaFlags classify_magma(CayleyTable const& t) {
    MagmaFlags f;
    f.associative = is_associative(t);
    f.idempotent  = is_idempotent(t);
    f.commutative = is_commutative(t);
    f.band        = f.associative && f.idempotent;
    f.semilattice = f.band && f.commutative;
    if (f.band) {
      f.rectangular = true;
      for (Element x = 0; x < t.size() && f.rectangular; ++x) {
        for (Element y = 0; y < t.size(); ++y) {
          if (t(t(x, y), x) != x) {
            f.rectangular = false;
            break;
          }
        }
      }
    }
    return f;
  }

  inline bool is_band(CayleyTable const& t) {
    return is_idempotent(t) && is_associative(t);
  }

  /// True iff xy = yx implies x = y for all x, y.
  inline bool is_anticommutative(CayleyTable const& t) {
    for (Element x = 0; x < t.size(); ++x) {
      for (Element y = x + 1; y < t.size(); ++y) {
        if (t(x, y) == t(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  /// True iff the partition is compatible with the operation on both sides.
  inline bool is_compatible(CayleyTable const& t, Partition const& part) {
    if (part.size() != t.size()) {
      return false;
    }
    // It suffices to check consecutive members of each block against every
    // element: compatibility with one-sided translations implies the
    // two-sided property for an equivalence.
    for (auto const& block : part.blocks()) {
      for (std::size_t i = 1; i < block.size(); ++i) {
        auto const a = block[i - 1];
        auto const b = block[i];
        for (Element c = 0; c < t.size(); ++c) {
          if (!part.related(t(a, c), t(b, c))
              || !part.related(t(c, a), t(c, b))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  /// A square boolean relation stored row-major.
  class Relation {
   public:
    Relation() = default;
    explicit Relation(std::size_t n) : n_(n), bits_(n * n, false) {}

    std::size_t size() const noexcept {
      return n_;
    }
    bool operator()(Element x, Element y) const {
      return bits_[x * n_ + y];
    }
    void set(Element x, Element y, bool value = true) {
      bits_[x * n_ + y] = value;
    }

    bool is_reflexive() const {
      for (Element x = 0; x < n_; ++x) {
        if (!(*this)(x, x)) {
          return false;
        }
      }
      return true;
    }

    bool is_transitive() const {
      for (Element x = 0; x < n_; ++x) {
        for (Element y = 0; y < n_; ++y) {
          if (!(*this)(x, y)) {
            continue;
          }
          for (Element z = 0; z < n_; ++z) {
            if ((*this)(y, z) && !(*this)(x, z)) {
              return false;
            }
          }
        }
      }
      return true;
    }

    bool is_antisymmetric() const {
      for (Element x = 0; x < n_; ++x) {
        for (Element y = x + 1; y < n_; ++y) {
          if ((*this)(x, y) && (*this)(y, x)) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_subset_of(Relation const& other) const {
      for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] && !other.bits_[i]) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(Relation const&, Relation const&) = default;

   private:
    std::size_t       n_ = 0;
    std::vector<bool> bits_;
  };

  /// Green's relations and the natural orders of a band.
  struct GreenData {
    Partition l_classes;
    Partition r_classes;
    Partition d_classes;
    Relation  preorder;       // x <~ y  iff  x = xyx
    Relation  partial_order;  // x <= y  iff  x = xy = yx
  };

  inline GreenData green_data(CayleyTable const& t) {
    if (!is_band(t)) {
      throw NotABand("Green's relations are only computed for bands");
    }
    auto const   n = t.size();
    DisjointSets l(n), r(n), d(n);
    GreenData    g;
    g.preorder      = Relation(n);
    g.partial_order = Relation(n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        auto const xy = t(x, y);
        auto const yx = t(y, x);
        if (xy == x && yx == y) {
          l.unite(x, y);
        }
        if (xy == y && yx == x) {
          r.unite(x, y);
        }
        if (t(xy, x) == x) {
          g.preorder.set(x, y);
        }
        if (xy == x && yx == x) {
          g.partial_order.set(x, y);
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (g.preorder(x, y) && g.preorder(y, x)) {
          d.unite(x, y);
        }
      }
    }
    g.l_classes = Partition::from_disjoint_sets(l);
    g.r_classes = Partition::from_disjoint_sets(r);
    g.d_classes = Partition::from_disjoint_sets(d);
    return g;
  }

  /// The quotient B / D, which is a semilattice for every band B. Element k
  /// of the result is the D-class with the k-th smallest least element.
  inline CayleyTable d_quotient(CayleyTable const& t) {
    auto const d      = green_data(t).d_classes;
    auto const blocks = d.blocks();
    return CayleyTable::from_function(
        blocks.size(), [&](Element i, Element j) {
          return d.block_of(t(blocks[i].front(), blocks[j].front()));
        });
  }

}  // namespace antilat
