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

// Congruences of antilattices.
//
// A partition of the carrier is a congruence exactly when it is cartesian
// for both the meet matrix and the join matrix. Everything here works on
// those row/column partitions: principal congruences are computed as a
// fixpoint over four union-find structures (rows and columns of M and J)
// rather than on Cayley tables.
//
// Naming: IdentityCongruence is the all-singletons partition and
// UniversalCongruence the one-block partition. (Some texts write these as
// nabla and Delta respectively.)

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "antilat/antilattice.hpp"
#include "antilat/error.hpp"
#include "antilat/partition.hpp"
#include "antilat/rectband.hpp"

namespace antilat {

  inline constexpr std::size_t default_max_order = 256;

  struct Congruence {
    Partition          partition;
    CartesianPartition meet_witness;
    CartesianPartition join_witness;

    std::size_t size() const noexcept {
      return partition.size();
    }
  };

  /// Table-level failure of compatibility: a ~ b but op(a, c) !~ op(b, c),
  /// or op(c, a) !~ op(c, b) when c multiplies from the left.
  struct CongruenceViolation {
    Operation op;
    Element   a;
    Element   b;
    Element   c;
    bool      c_on_right;  // true: a.c vs b.c; false: c.a vs c.b

    std::string describe(std::size_t base = 0) const {
      auto        s   = [base](Element x) { return std::to_string(x + base); };
      char const* sym = op == Operation::meet ? "^" : "v";
      std::string lhs = c_on_right ? s(a) + sym + s(c) : s(c) + sym + s(a);
      std::string rhs = c_on_right ? s(b) + sym + s(c) : s(c) + sym + s(b);
      return s(a) + " ~ " + s(b) + " but " + lhs + " !~ " + rhs;
    }
  };

  class NotACongruence : public Error {
   public:
    NotACongruence(CongruenceViolation v, std::size_t base = 0)
        : Error("not a congruence: " + v.describe(base)), violation_(v) {}

    CongruenceViolation const& violation() const noexcept {
      return violation_;
    }

   private:
    CongruenceViolation violation_;
  };

  /// A violating triple for part, checked directly against both operations.
  inline std::optional<CongruenceViolation>
  find_congruence_violation(Antilattice const& n, Partition const& part) {
    for (auto const& block : part.blocks()) {
      for (std::size_t i = 1; i < block.size(); ++i) {
        auto const a = block[i - 1];
        auto const b = block[i];
        for (auto op : {Operation::meet, Operation::join}) {
          for (Element c = 0; c < n.size(); ++c) {
            if (!part.related(n.apply(op, a, c), n.apply(op, b, c))) {
              return CongruenceViolation{op, a, b, c, true};
            }
            if (!part.related(n.apply(op, c, a), n.apply(op, c, b))) {
              return CongruenceViolation{op, a, b, c, false};
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  /// The congruence with partition part, or nullopt if part is not cartesian
  /// in both generating matrices.
  inline std::optional<Congruence> is_congruence(Antilattice const& n,
                                                 Partition const&   part) {
    if (part.size() != n.size()) {
      throw MixedCarrier("partition and antilattice have different carriers");
    }
    auto m = is_cartesian(n.meet_matrix(), part);
    if (!m) {
      return std::nullopt;
    }
    auto j = is_cartesian(n.join_matrix(), part);
    if (!j) {
      return std::nullopt;
    }
    return Congruence{part, std::move(*m), std::move(*j)};
  }

  /// Like is_congruence, but throws NotACongruence with a witness.
  inline Congruence require_congruence(Antilattice const& n,
                                       Partition const&   part,
                                       std::size_t        base = 0) {
    if (auto c = is_congruence(n, part)) {
      return std::move(*c);
    }
    auto v = find_congruence_violation(n, part);
    if (!v) {
      throw std::logic_error("cartesian test and table test disagree");
    }
    throw NotACongruence(*v, base);
  }

  inline Congruence identity_congruence(Antilattice const& n) {
    return *is_congruence(n, Partition::identity(n.size()));
  }

  inline Congruence universal_congruence(Antilattice const& n) {
    return *is_congruence(n, Partition::universal(n.size()));
  }

  namespace detail {

    // Row/column partitions of M and J that only ever coarsen. close()
    // drives them to the least state in which M and J induce the same
    // partition of the carrier.
    class CartesianClosure {
     public:
      explicit CartesianClosure(Antilattice const& n)
          : n_(&n),
            m_rows_(n.meet_matrix().rows()),
            m_cols_(n.meet_matrix().cols()),
            j_rows_(n.join_matrix().rows()),
            j_cols_(n.join_matrix().cols()),
            key_(n.size()),
            first_(n.size()) {}

      void relate(Element a, Element b) {
        auto const& m = n_->meet_matrix();
        auto const& j = n_->join_matrix();
        m_rows_.unite(m.row_of(a), m.row_of(b));
        m_cols_.unite(m.col_of(a), m.col_of(b));
        j_rows_.unite(j.row_of(a), j.row_of(b));
        j_cols_.unite(j.col_of(a), j.col_of(b));
      }

      void relate_all(Partition const& p) {
        std::vector<Element> first(p.block_count(), n_->size());
        for (Element e = 0; e < p.size(); ++e) {
          auto& f = first[p.block_of(e)];
          if (f == n_->size()) {
            f = e;
          } else {
            relate(f, e);
          }
        }
      }

      void close() {
        bool changed = true;
        while (changed) {
          changed = push(n_->meet_matrix(), m_rows_, m_cols_, n_->join_matrix(),
                         j_rows_, j_cols_);
          changed = push(n_->join_matrix(), j_rows_, j_cols_, n_->meet_matrix(),
                         m_rows_, m_cols_)
                    || changed;
        }
      }

      Partition partition() {
        auto const& m = n_->meet_matrix();
        for (Element e = 0; e < n_->size(); ++e) {
          key_[e] = m_rows_.find(m.row_of(e)) * m.cols() + m_cols_.find(m.col_of(e));
        }
        return Partition::from_labels(key_);
      }

      /// True once a single block remains (only valid after close()).
      bool is_universal() {
        auto const& m = n_->meet_matrix();
        auto const  r = m_rows_.find(m.row_of(0));
        auto const  c = m_cols_.find(m.col_of(0));
        for (std::size_t i = 0; i < m.rows(); ++i) {
          if (m_rows_.find(i) != r) {
            return false;
          }
        }
        for (std::size_t k = 0; k < m.cols(); ++k) {
          if (m_cols_.find(k) != c) {
            return false;
          }
        }
        return true;
      }

     private:
      // Elements in one block of src's induced partition must be related in
      // dst: unite their rows and columns there.
      bool push(GeneratingMatrix const& src,
                DisjointSets&           src_rows,
                DisjointSets&           src_cols,
                GeneratingMatrix const& dst,
                DisjointSets&           dst_rows,
                DisjointSets&           dst_cols) {
        bool       changed = false;
        auto const none    = n_->size();
        std::fill(first_.begin(), first_.end(), none);
        for (Element e = 0; e < n_->size(); ++e) {
          auto const k = src_rows.find(src.row_of(e)) * src.cols()
                         + src_cols.find(src.col_of(e));
          auto& f = first_[k];
          if (f == none) {
            f = e;
            continue;
          }
          changed = dst_rows.unite(dst.row_of(f), dst.row_of(e)) || changed;
          changed = dst_cols.unite(dst.col_of(f), dst.col_of(e)) || changed;
        }
        return changed;
      }

      Antilattice const*       n_;
      DisjointSets             m_rows_, m_cols_, j_rows_, j_cols_;
      std::vector<std::size_t> key_;
      std::vector<Element>     first_;
    };

    inline Congruence checked(Antilattice const& n, Partition const& p) {
      auto c = is_congruence(n, p);
      if (!c) {
        throw std::logic_error("computed partition is not a congruence: "
                               + p.to_string());
      }
      return std::move(*c);
    }

  }  // namespace detail

  /// The least congruence relating a and b.
  inline Congruence principal_congruence(Antilattice const& n, Element a, Element b) {
    if (a >= n.size() || b >= n.size()) {
      throw InvalidArgument("element outside the carrier");
    }
    detail::CartesianClosure closure(n);
    closure.relate(a, b);
    closure.close();
    return detail::checked(n, closure.partition());
  }

  inline Partition principal_partition(Antilattice const& n, Element a, Element b) {
    detail::CartesianClosure closure(n);
    closure.relate(a, b);
    closure.close();
    return closure.partition();
  }

  /// Join in the congruence lattice: transitive closure of the union.
  inline Congruence join(Antilattice const& n, Congruence const& x, Congruence const& y) {
    if (x.size() != n.size() || y.size() != n.size()) {
      throw MixedCarrier("congruences of different antilattices");
    }
    return detail::checked(n, Partition::join(x.partition, y.partition));
  }

  /// Meet in the congruence lattice: common refinement.
  inline Congruence meet(Antilattice const& n, Congruence const& x, Congruence const& y) {
    if (x.size() != n.size() || y.size() != n.size()) {
      throw MixedCarrier("congruences of different antilattices");
    }
    return detail::checked(n, Partition::meet(x.partition, y.partition));
  }

  struct CongruenceLattice {
    /// Sorted by block count, then lexicographically by label vector; the
    /// universal congruence is first and the identity last.
    std::vector<Congruence>                          elements;
    std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper), sorted
    std::vector<std::size_t>                         atoms;
    std::vector<std::size_t>                         coatoms;

    /// Element i refines element j.
    bool leq(std::size_t i, std::size_t j) const {
      return elements[i].partition.refines(elements[j].partition);
    }

    std::size_t size() const noexcept {
      return elements.size();
    }
    std::size_t identity_index() const noexcept {
      return elements.size() - 1;
    }
    std::size_t universal_index() const noexcept {
      return 0;
    }

    std::optional<std::size_t> find(Partition const& p) const {
      for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].partition == p) {
          return i;
        }
      }
      return std::nullopt;
    }
  };

  /// All principal congruences (as partitions, deduplicated).
  inline std::vector<Partition> principal_partitions(Antilattice const& n) {
    std::vector<Partition> result;
    std::unordered_map<Partition, std::size_t, PartitionHash> index;
    for (Element a = 0; a < n.size(); ++a) {
      for (Element b = a + 1; b < n.size(); ++b) {
        auto p = principal_partition(n, a, b);
        if (index.emplace(p, result.size()).second) {
          result.push_back(std::move(p));
        }
      }
    }
    return result;
  }

  /// Every congruence of n together with the Hasse diagram.
  ///
  /// Every congruence of a finite algebra is a join of principal ones, so the
  /// lattice is the closure of {identity} under joins with principals.
  inline CongruenceLattice all_congruences(Antilattice const& n,
                                           std::size_t max_order = default_max_order) {
    if (n.size() > max_order) {
      throw OrderGuardExceeded(n.size(), max_order);
    }
    auto const principals = principal_partitions(n);

    std::vector<Partition> found{Partition::identity(n.size())};
    std::unordered_map<Partition, std::size_t, PartitionHash> index{{found[0], 0}};
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (auto const& p : principals) {
        auto j = Partition::join(found[i], p);
        if (index.emplace(j, found.size()).second) {
          found.push_back(std::move(j));
        }
      }
    }
    std::sort(found.begin(), found.end(), [](Partition const& a, Partition const& b) {
      if (a.block_count() != b.block_count()) {
        return a.block_count() < b.block_count();
      }
      return a < b;
    });

    CongruenceLattice lat;
    lat.elements.reserve(found.size());
    index.clear();
    for (std::size_t i = 0; i < found.size(); ++i) {
      lat.elements.push_back(detail::checked(n, found[i]));
      index.emplace(found[i], i);
    }
    // Every upper cover of x is x v theta(a, b) for some principal
    // congruence theta(a, b), so the covers of x are the minimal such joins.
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < found.size(); ++i) {
      candidates.clear();
      for (auto const& p : principals) {
        auto const j = index.at(Partition::join(found[i], p));
        if (j != i) {
          candidates.push_back(j);
        }
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (auto j : candidates) {
        bool minimal = true;
        for (auto m : candidates) {
          if (m != j && found[m].refines(found[j])) {
            minimal = false;
            break;
          }
        }
        if (minimal) {
          lat.covers.emplace_back(i, j);
        }
      }
    }
    std::sort(lat.covers.begin(), lat.covers.end());
    for (auto [lo, hi] : lat.covers) {
      if (lo == lat.identity_index()) {
        lat.atoms.push_back(hi);
      }
      if (hi == lat.universal_index()) {
        lat.coatoms.push_back(lo);
      }
    }
    std::sort(lat.atoms.begin(), lat.atoms.end());
    std::sort(lat.coatoms.begin(), lat.coatoms.end());
    return lat;
  }

  struct Quotient {
    Antilattice          antilattice;
    /// Least element of each block, indexed by quotient element.
    std::vector<Element> representative;
  };

  inline Quotient quotient(Antilattice const& n, Congruence const& c) {
    auto const check = is_congruence(n, c.partition);
    if (!check) {
      throw NotACongruence(*find_congruence_violation(n, c.partition));
    }
    Quotient q{Antilattice(quotient_matrix(n.meet_matrix(), check->meet_witness),
                           quotient_matrix(n.join_matrix(), check->join_witness)),
               {}};
    for (auto const& block : c.partition.blocks()) {
      q.representative.push_back(block.front());
    }
    return q;
  }

  /// Simple: every principal congruence of a pair of distinct elements is
  /// universal. threads > 1 splits the pair sweep across worker threads.
  inline bool is_simple(Antilattice const& n, unsigned threads = 1) {
    auto const size = n.size();
    if (size <= 2) {
      return true;
    }
    std::atomic<bool> simple{true};
    auto sweep = [&](Element first_a, Element step) {
      detail::CartesianClosure proto(n);
      for (Element a = first_a; a < size && simple.load(std::memory_order_relaxed);
           a += step) {
        for (Element b = a + 1; b < size; ++b) {
          auto closure = proto;
          closure.relate(a, b);
          closure.close();
          if (!closure.is_universal()) {
            simple = false;
            return;
          }
        }
      }
    };
    if (threads <= 1) {
      sweep(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(sweep, Element(t), Element(threads));
      }
      for (auto& th : pool) {
        th.join();
      }
    }
    return simple;
  }

  /// Factor-congruence test: true iff alpha ^ beta = identity and
  /// alpha o beta = universal, i.e. x -> (x/alpha, x/beta) is a bijection.
  inline bool is_factor_pair(Partition const& alpha, Partition const& beta) {
    if (alpha.block_count() * beta.block_count() != alpha.size()) {
      return false;
    }
    std::vector<char> hit(alpha.size(), 0);
    for (Element x = 0; x < alpha.size(); ++x) {
      auto& h = hit[alpha.block_of(x) * beta.block_count() + beta.block_of(x)];
      if (h) {
        return false;
      }
      h = 1;
    }
    return true;
  }

  /// A nontrivial factor pair, if n is a direct product of two nontrivial
  /// antilattices.
  inline std::optional<std::pair<Congruence, Congruence>>
  find_factor_pair(CongruenceLattice const& lat) {
    auto const k = lat.size();
    for (std::size_t i = 1; i + 1 < k; ++i) {
      for (std::size_t j = i + 1; j + 1 < k; ++j) {
        if (is_factor_pair(lat.elements[i].partition, lat.elements[j].partition)) {
          return std::make_pair(lat.elements[i], lat.elements[j]);
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_irreducible(Antilattice const& n,
                             std::size_t max_order = default_max_order) {
    if (n.size() > max_order) {
      throw OrderGuardExceeded(n.size(), max_order);
    }
    if (n.size() <= 1) {
      return true;
    }
    return !find_factor_pair(all_congruences(n, max_order)).has_value();
  }

  /// Least subset containing seed and closed under meet and join.
  inline std::vector<Element> generated_subalgebra(Antilattice const&       n,
                                                   std::vector<Element> const& seed) {
    if (seed.empty()) {
      throw InvalidArgument("the generating set must be nonempty");
    }
    std::vector<char>    in(n.size(), 0);
    std::vector<Element> members;
    auto                 add = [&](Element e) {
      if (!in[e]) {
        in[e] = 1;
        members.push_back(e);
      }
    };
    for (auto e : seed) {
      if (e >= n.size()) {
        throw InvalidArgument("generator outside the carrier");
      }
      add(e);
    }
    // members[0, done) have been multiplied with every member before them.
    for (std::size_t done = 0; done < members.size(); ++done) {
      auto const x = members[done];
      for (std::size_t i = 0; i <= done; ++i) {
        auto const y = members[i];
        add(n.meet(x, y));
        add(n.meet(y, x));
        add(n.join(x, y));
        add(n.join(y, x));
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  /// No proper subantilattice with more than one element.
  inline bool is_elementary(Antilattice const& n) {
    for (Element a = 0; a < n.size(); ++a) {
      for (Element b = a + 1; b < n.size(); ++b) {
        if (generated_subalgebra(n, {a, b}).size() != n.size()) {
          return false;
        }
      }
    }
    return true;
  }

  /// A pair {a, b} is a subantilattice iff a and b are collinear in both M
  /// and J.
  inline bool is_two_element_subalgebra(Antilattice const& n, Element a, Element b) {
    return a != b && n.meet_matrix().collinear(a, b) && n.join_matrix().collinear(a, b);
  }

  /// No two-element subantilattice (the antilattice itself included).
  inline bool is_odd(Antilattice const& n) {
    for (Element a = 0; a < n.size(); ++a) {
      for (Element b = a + 1; b < n.size(); ++b) {
        if (is_two_element_subalgebra(n, a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  /// The four quasi-identities characterising odd antilattices, evaluated
  /// literally on all pairs. Each forbids one of the four 2-element
  /// antilattices (meet left/right zero x join left/right zero).
  inline bool satisfies_odd_quasi_identities(Antilattice const& n) {
    for (Element x = 0; x < n.size(); ++x) {
      for (Element y = 0; y < n.size(); ++y) {
        if (x == y) {
          continue;
        }
        bool const meet_left  = n.meet(x, y) == x && n.meet(y, x) == y;
        bool const meet_right = n.meet(x, y) == y && n.meet(y, x) == x;
        bool const join_left  = n.join(x, y) == x && n.join(y, x) == y;
        bool const join_right = n.join(x, y) == y && n.join(y, x) == x;
        if ((meet_left || meet_right) && (join_left || join_right)) {
          return false;
        }
      }
    }
    return true;
  }

  struct ClassProfile {
    std::size_t              class_count = 0;
    std::vector<std::size_t> class_sizes;  // in block order
  };

  inline ClassProfile congruence_class_profile(Antilattice const& n, Congruence const& c) {
    if (c.size() != n.size()) {
      throw MixedCarrier("congruence of a different antilattice");
    }
    return {c.partition.block_count(), c.partition.block_sizes()};
  }

}  // namespace antilat
