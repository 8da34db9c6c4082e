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

#include "antilat/rectband.hpp"
#include "support/oracles.hpp"

using namespace antilat;

namespace {

  CayleyTable const meet43({{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}});
  CayleyTable const join43({{0, 2, 2, 0}, {3, 1, 1, 3}, {0, 2, 2, 0}, {3, 1, 1, 3}});

  /// Same band up to a permutation of rows and of columns.
  bool same_band(GeneratingMatrix const& a, GeneratingMatrix const& b) {
    return band_from_generating_matrix(a) == band_from_generating_matrix(b);
  }

}  // namespace

TEST_CASE("generating matrix validation") {
  CHECK_THROWS_AS(GeneratingMatrix(2, 2, {0, 1, 1, 3}), InvalidArgument);
  CHECK_THROWS_AS(GeneratingMatrix(2, 2, {0, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(GeneratingMatrix(2, 2, {0, 1, 2, 4}), InvalidArgument);
  GeneratingMatrix g({{3, 1}, {0, 2}});
  CHECK(g.rows() == 2);
  CHECK(g.row_of(0) == 1);
  CHECK(g.col_of(0) == 0);
  CHECK(g.product(3, 2) == 1);
  CHECK(g.product(2, 3) == 0);
}

TEST_CASE("linear extraction on the small reducts") {
  auto const m = extract_generating_matrix(meet43);
  REQUIRE(m);
  CHECK(m->to_rows() == std::vector<std::vector<Element>>{{0, 1, 2, 3}});

  auto const j = extract_generating_matrix(join43);
  REQUIRE(j);
  CHECK(same_band(*j, GeneratingMatrix({{0, 2}, {3, 1}})));
  CHECK(j->to_rows() == std::vector<std::vector<Element>>{{0, 2}, {3, 1}});

  CHECK_FALSE(extract_generating_matrix(CayleyTable({{0, 0}, {0, 1}})));
}

TEST_CASE("the non-associative counterexample fills a 2x2 matrix") {
  CayleyTable const t({{0, 1, 0, 0}, {0, 1, 2, 0}, {2, 3, 2, 0}, {0, 0, 0, 3}});
  auto const        tr = rectangularity_trace(t);
  CHECK(tr.shape_ok);
  CHECK(tr.filled);
  CHECK(tr.cells == std::vector<Element>{0, 1, 2, 3});
  REQUIRE(tr.failed_check);
  CHECK(*tr.failed_check == std::pair<Element, Element>{2, 1});
  CHECK_FALSE(extract_generating_matrix(t));
  CHECK_FALSE(is_associative(t));
  CHECK_FALSE(band_and_rectangular(t));
}

TEST_CASE("a non-associative table can pass the linear extraction") {
  // 3x3 rectangular band with 4*5 changed: the extraction never reads it.
  auto t = band_from_generating_matrix(GeneratingMatrix::normal(3, 3));
  auto e = t.entries();
  e[4 * 9 + 5] = 4;
  CayleyTable const broken(9, e);
  REQUIRE(is_idempotent(broken));
  REQUIRE_FALSE(is_associative(broken));
  CHECK(extract_generating_matrix(broken));
  CHECK_FALSE(band_and_rectangular(broken));
}

TEST_CASE("band from generating matrix") {
  auto const row = band_from_generating_matrix(GeneratingMatrix::normal(1, 5));
  CHECK(row == CayleyTable::right_zero(5));
  auto const col = band_from_generating_matrix(GeneratingMatrix::normal(5, 1));
  CHECK(col == CayleyTable::left_zero(5));
  auto const sq = band_from_generating_matrix(GeneratingMatrix({{0, 1}, {2, 3}}));
  CHECK(oracle::rectangular_band(oracle::table_of(sq)));
}

TEST_CASE("round trip through the table on random matrices") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    auto const n = 1 + rng() % 36;
    auto const g = oracle::random_matrix(n, rng);
    auto const t = band_from_generating_matrix(g);
    auto const h = extract_generating_matrix(t);
    REQUIRE(h);
    REQUIRE(band_from_generating_matrix(*h) == t);
    REQUIRE(same_band(*h, g));
  }
}

TEST_CASE("extraction agrees with the naive test on bands") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 60; ++k) {
    oracle::Table t;
    if (k % 2 == 0) {
      std::vector<std::size_t> sizes{1 + rng() % 4, 1 + rng() % 4};
      t = oracle::ordinal_sum(sizes, rng);
    } else {
      t = oracle::semilattice_times_rectangular(1 + rng() % 6, rng);
    }
    REQUIRE(oracle::associative(t));
    CayleyTable const c(t);
    REQUIRE(extract_generating_matrix(c).has_value() == oracle::rectangular_band(t));
  }
}

TEST_CASE("lookup count is linear") {
  std::vector<double> per_element;
  for (std::size_t n : {4, 16, 64, 256}) {
    std::size_t lookups = 0;
    REQUIRE(extract_generating_matrix(CayleyTable::left_zero(n), &lookups));
    per_element.push_back(double(lookups) / double(n));
  }
  auto const [lo, hi] = std::minmax_element(per_element.begin(), per_element.end());
  CHECK(*hi / *lo <= 1.2);
}

TEST_CASE("normal form") {
  auto const nf = to_normal_form(GeneratingMatrix({{3, 1}, {0, 2}}));
  CHECK(nf.matrix == GeneratingMatrix::normal(2, 2));
  CHECK(nf.relabeling == std::vector<Element>{2, 1, 3, 0});

  auto const id = to_normal_form(GeneratingMatrix::normal(3, 4));
  CHECK(id.relabeling == std::vector<Element>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});

  std::mt19937_64 rng(23);
  for (int k = 0; k < 50; ++k) {
    auto const g  = oracle::random_matrix(12, rng);
    auto const n1 = to_normal_form(g).matrix;
    REQUIRE(n1.is_normal());
    REQUIRE(to_normal_form(n1).matrix == n1);
    REQUIRE(n1 == GeneratingMatrix::normal(g.rows(), g.cols()));
    // The relabeling is an isomorphism.
    auto const r = to_normal_form(g).relabeling;
    for (Element x = 0; x < 12; ++x) {
      for (Element y = 0; y < 12; ++y) {
        REQUIRE(r[g.product(x, y)] == n1.product(r[x], r[y]));
      }
    }
  }
}

TEST_CASE("kronecker product") {
  auto const k = kronecker(GeneratingMatrix::normal(1, 2), GeneratingMatrix::normal(2, 1));
  // Pair (g, h) is g * 2 + h; row (0, i), column (j, 0).
  CHECK(k.to_rows() == std::vector<std::vector<Element>>{{0, 2}, {1, 3}});

  // The product band is the direct product of the factors.
  std::mt19937_64 rng(29);
  for (int t = 0; t < 20; ++t) {
    auto const g = oracle::random_matrix(1 + rng() % 6, rng);
    auto const h = oracle::random_matrix(1 + rng() % 6, rng);
    auto const p = kronecker(g, h);
    auto const n = h.size();
    for (Element x = 0; x < p.size(); ++x) {
      for (Element y = 0; y < p.size(); ++y) {
        REQUIRE(p.product(x, y)
                == g.product(x / n, y / n) * n + h.product(x % n, y % n));
      }
    }
  }

  auto const g = GeneratingMatrix({{3, 1}, {0, 2}});
  CHECK(kronecker(g, GeneratingMatrix::normal(1, 1)) == g);
  auto const big = kronecker(GeneratingMatrix::normal(2, 3), GeneratingMatrix::normal(3, 2));
  CHECK(big.rows() == 6);
  CHECK(big.cols() == 6);
}

TEST_CASE("cartesian partitions") {
  auto const g = GeneratingMatrix::normal(3, 5);
  DisjointSets rows(3), cols(5);
  rows.unite(0, 1);
  cols.unite(0, 1);
  cols.unite(1, 2);
  cols.unite(3, 4);
  auto const part = induced_partition(g, Partition::from_disjoint_sets(rows),
                                      Partition::from_disjoint_sets(cols));
  CHECK(part.to_string(0) == "0,1,2,5,6,7|3,4,8,9|10,11,12|13,14");
  auto const cp = is_cartesian(g, part);
  REQUIRE(cp);
  CHECK(cp->row_partition == Partition::from_disjoint_sets(rows));
  CHECK(cp->col_partition == Partition::from_disjoint_sets(cols));

  auto const single = is_cartesian(g, Partition::identity(15));
  REQUIRE(single);
  CHECK(single->row_partition.is_identity());
  CHECK(single->col_partition.is_identity());

  CHECK_FALSE(is_cartesian(GeneratingMatrix::normal(2, 2), Partition::from_blocks(4, {{0, 3}, {1, 2}})));
}

TEST_CASE("cartesian test agrees with band compatibility") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    auto const g    = oracle::random_matrix(1 + rng() % 6, rng);
    auto const band = band_from_generating_matrix(g);
    oracle::for_each_set_partition(g.size(), [&](oracle::Labels const& l) {
      auto const p = Partition::from_labels(l);
      REQUIRE(is_cartesian(g, p).has_value() == is_compatible(band, p));
    });
  }
}
