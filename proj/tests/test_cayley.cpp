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

#include <catch_amalgamated.hpp>

#include "antilat/cayley.hpp"
#include "antilat/rectband.hpp"
#include "support/oracles.hpp"

using namespace antilat;

namespace {

  CayleyTable one_based(std::vector<std::vector<Element>> rows) {
    for (auto& r : rows) {
      for (auto& e : r) {
        --e;
      }
    }
    return CayleyTable(rows);
  }

  CayleyTable const counterexample = one_based({{1, 2, 1, 1}, {1, 2, 3, 1}, {3, 4, 3, 1}, {1, 1, 1, 4}});
  CayleyTable const meet43({{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}});
  CayleyTable const join43({{0, 2, 2, 0}, {3, 1, 1, 3}, {0, 2, 2, 0}, {3, 1, 1, 3}});
  CayleyTable const semilattice2({{0, 0}, {0, 1}});

  /// Every table on n elements, as a callback.
  template <typename F>
  void for_each_table(std::size_t n, F&& f) {
    std::vector<Element> entries(n * n, 0);
    while (true) {
      f(CayleyTable(n, entries));
      std::size_t k = 0;
      while (k < entries.size() && ++entries[k] == n) {
        entries[k++] = 0;
      }
      if (k == entries.size()) {
        return;
      }
    }
  }

}  // namespace

TEST_CASE("cayley table validation") {
  CHECK_THROWS_AS(CayleyTable(0, {}), InvalidArgument);
  CHECK_THROWS_AS(CayleyTable(2, {0, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(CayleyTable(2, {0, 1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(CayleyTable(std::vector<std::vector<Element>>{{0, 1}, {1}}), InvalidArgument);
}

TEST_CASE("the idempotent counterexample is not associative") {
  CHECK(is_idempotent(counterexample));
  auto const w = associativity_witness(counterexample);
  REQUIRE(w);
  // (1,2,3) in 1-based labels: (1*2)*3 = 2*3 = 3 but 1*(2*3) = 1*3 = 1.
  CHECK(*w == std::array<Element, 3>{0, 1, 2});
  auto const f = classify_magma(counterexample);
  CHECK(f.idempotent);
  CHECK_FALSE(f.associative);
  CHECK_FALSE(f.band);
  CHECK_FALSE(f.rectangular);
}

TEST_CASE("associativity agrees with the triple loop on random tables") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    std::vector<Element> e(25);
    for (auto& x : e) {
      x = rng() % 5;
    }
    CayleyTable t(5, e);
    REQUIRE(is_associative(t) == oracle::associative(oracle::table_of(t)));
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(is_associative(CayleyTable::left_zero(n)));
    CHECK(is_associative(CayleyTable::right_zero(n)));
  }
}

TEST_CASE("magma flags") {
  CHECK_FALSE(is_idempotent(CayleyTable(2, {1, 1, 1, 1})));
  CHECK(is_idempotent(meet43));

  auto const j = classify_magma(join43);
  CHECK(j.band);
  CHECK(j.rectangular);
  CHECK_FALSE(j.semilattice);

  auto const s = classify_magma(semilattice2);
  CHECK(s.semilattice);
  CHECK_FALSE(s.rectangular);

  auto const one = classify_magma(CayleyTable(1, {0}));
  CHECK(one.band);
  CHECK(one.semilattice);
  CHECK(one.rectangular);
}

TEST_CASE("rectangular iff anticommutative, over every band of order at most 3") {
  std::size_t bands = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_table(n, [&](CayleyTable const& t) {
      auto const f = classify_magma(t);
      if (!f.band) {
        return;
      }
      ++bands;
      REQUIRE(f.rectangular == is_anticommutative(t));
      REQUIRE(f.rectangular == oracle::rectangular_band(oracle::table_of(t)));
    });
  }
  CHECK(bands > 0);
}

TEST_CASE("green data of a rectangular band follows the generating matrix") {
  auto const g = green_data(join43);
  CHECK(g.r_classes == Partition::from_blocks(4, {{0, 2}, {1, 3}}));
  CHECK(g.l_classes == Partition::from_blocks(4, {{0, 3}, {1, 2}}));
  CHECK(g.d_classes.is_universal());

  auto const lz = green_data(CayleyTable::left_zero(3));
  CHECK(lz.l_classes.is_universal());
  CHECK(lz.r_classes.is_identity());

  auto const sl = green_data(semilattice2);
  CHECK(sl.l_classes.is_identity());
  CHECK(sl.r_classes.is_identity());
  CHECK(sl.d_classes.is_identity());

  CHECK_THROWS_AS(green_data(counterexample), NotABand);
}

TEST_CASE("green data invariants on random bands") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) {
    std::vector<std::size_t> sizes{1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 2};
    auto const               t = CayleyTable(oracle::ordinal_sum(sizes, rng));
    REQUIRE(is_band(t));
    auto const g = green_data(t);
    REQUIRE(g.d_classes == Partition::join(g.l_classes, g.r_classes));
    REQUIRE(g.partial_order.is_subset_of(g.preorder));
    REQUIRE(g.preorder.is_reflexive());
    REQUIRE(g.preorder.is_transitive());
    REQUIRE(g.partial_order.is_antisymmetric());
    REQUIRE(g.partial_order.is_transitive());
    REQUIRE(classify_magma(d_quotient(t)).semilattice);
    REQUIRE(d_quotient(t).size() == sizes.size());
  }
}

TEST_CASE("d quotient") {
  CHECK(d_quotient(join43).size() == 1);
  CHECK(d_quotient(semilattice2) == semilattice2);

  // Left-zero pair {2, 3} above right-zero pair {0, 1}: the lower class
  // absorbs the upper one from both sides.
  auto const t = CayleyTable::from_function(4, [](Element x, Element y) -> Element {
    bool const lx = x < 2, ly = y < 2;
    if (lx && ly) {
      return y;  // right zero
    }
    if (!lx && !ly) {
      return x;  // left zero
    }
    return lx ? x : y;
  });
  REQUIRE(is_band(t));
  CHECK(d_quotient(t) == semilattice2);
}

TEST_CASE("there are exactly four simple bands") {
  // Simple: the only compatible partitions are identity and universal.
  auto simple = [](CayleyTable const& t) {
    bool only_trivial = true;
    oracle::for_each_set_partition(t.size(), [&](oracle::Labels const& l) {
      auto const p = Partition::from_labels(l);
      if (!p.is_identity() && !p.is_universal() && is_compatible(t, p)) {
        only_trivial = false;
      }
    });
    return only_trivial;
  };
  // Up to isomorphism, order 2 tables are identified with their image under
  // the swap of 0 and 1.
  std::set<std::vector<Element>> simple_classes;
  std::size_t                    simple_order3 = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_table(n, [&](CayleyTable const& t) {
      if (!is_band(t) || !simple(t)) {
        return;
      }
      if (n == 3) {
        ++simple_order3;
        return;
      }
      auto e = t.entries();
      if (n == 2) {
        auto swapped = CayleyTable::from_function(
            2, [&](Element x, Element y) { return 1 - t(1 - x, 1 - y); });
        e = std::min(e, swapped.entries());
      }
      simple_classes.insert(e);
    });
  }
  CHECK(simple_classes.size() == 4);
  CHECK(simple_order3 == 0);
}
