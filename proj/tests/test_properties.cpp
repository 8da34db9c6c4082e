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

#include <cmath>

#include "antilat/antilat.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace antilat;

namespace {

  /// Fixtures, random antilattices of order at most 9 and constructed ones.
  /// Random orders stay small because a flat antilattice of order n can
  /// have Bell(n) congruences.
  std::vector<Antilattice> corpus() {
    std::vector<Antilattice> out;
    for (auto name : fixtures::antilattices) {
      auto n = fixtures::antilattice(name);
      if (n.size() <= 81) {
        out.push_back(std::move(n));
      }
    }
    std::mt19937_64 rng(91);
    for (int k = 0; k < 150; ++k) {
      out.push_back(oracle::random_antilattice(1 + rng() % 9, rng));
    }
    for (std::size_t side : {1, 3, 4, 5}) {
      auto const base = latin_antilattice_from_mols(generate_mols(side));
      std::vector<Element> perm(base.size());
      std::iota(perm.begin(), perm.end(), Element(0));
      for (int k = 0; k < 3; ++k) {
        std::shuffle(perm.begin(), perm.end(), rng);
        out.push_back(base.relabeled(perm));
      }
    }
    out.push_back(product(fixtures::antilattice("order2_ll.alat"), fixtures::antilattice("loshu.alat")));
    out.push_back(product(flat_antilattice(2, true, false), flat_antilattice(3, false, true)));
    return out;
  }

  bool is_square_number(std::size_t k) {
    auto const r = static_cast<std::size_t>(std::llround(std::sqrt(double(k))));
    return r * r == k;
  }

}  // namespace

TEST_CASE("implications among the classes") {
  for (auto const& n : corpus()) {
    auto const r = classify(n);
    INFO("order " << n.size() << ": " << format_alat({0, n}));
    REQUIRE(r.simple.has_value());
    REQUIRE(r.irreducible.has_value());
    CHECK(r.odd == r.latin);
    CHECK(r.odd == (r.even_edge_count == 0));
    if (r.latin) {
      CHECK(r.semimagic_presentation);
    }
    if (r.semimagic_presentation) {
      CHECK(r.type.square);
    }
    if (*r.simple) {
      CHECK(*r.irreducible);
    }
    if (r.elementary && n.size() != 2) {
      CHECK(r.odd);
      CHECK(*r.simple);
    }
    if (r.odd) {
      CHECK(r.type.square);
    }
    CHECK(satisfies_odd_quasi_identities(n) == r.odd);
    CHECK(r.quasilattice);
  }
}

TEST_CASE("congruence classes of odd antilattices") {
  for (auto const& n : corpus()) {
    if (!is_odd(n) || n.size() > 25) {
      continue;
    }
    for (auto const& c : all_congruences(n).elements) {
      auto const profile = congruence_class_profile(n, c);
      REQUIRE(is_square_number(profile.class_count));
      for (auto s : profile.class_sizes) {
        REQUIRE(s == profile.class_sizes.front());
      }
    }
  }
}

TEST_CASE("cartesian and table-level congruence tests agree") {
  std::mt19937_64 rng(93);
  for (int k = 0; k < 40; ++k) {
    auto const n = oracle::random_antilattice(1 + rng() % 6, rng);
    oracle::for_each_set_partition(n.size(), [&](oracle::Labels const& l) {
      auto const p = Partition::from_labels(l);
      REQUIRE(is_congruence(n, p).has_value() == !find_congruence_violation(n, p).has_value());
    });
  }
}

TEST_CASE("normalisation and relabeling preserve every predicate") {
  std::mt19937_64 rng(95);
  for (auto const& n : corpus()) {
    if (n.size() > 25) {
      continue;
    }
    auto const r = classify(n);
    std::vector<Element> perm(n.size());
    std::iota(perm.begin(), perm.end(), Element(0));
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto const& m : {normalize(n), n.relabeled(perm)}) {
      auto const s = classify(m);
      REQUIRE(s.type == r.type);
      REQUIRE(s.odd == r.odd);
      REQUIRE(s.latin == r.latin);
      REQUIRE(s.simple == r.simple);
      REQUIRE(s.irreducible == r.irreducible);
      REQUIRE(s.elementary == r.elementary);
      REQUIRE(s.congruence_count == r.congruence_count);
      REQUIRE(s.even_edge_count == r.even_edge_count);
      REQUIRE(s.regularity.regular == r.regularity.regular);
    }
  }
}

TEST_CASE("regular odd antilattices of small order are trivial") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_antilattice(n, [&](Antilattice const& x) {
      if (regularity(x).regular && is_odd(x)) {
        REQUIRE(x.size() == 1);
      }
    });
  }
}

TEST_CASE("products of nontrivial antilattices are reducible") {
  std::mt19937_64 rng(97);
  for (int k = 0; k < 20; ++k) {
    auto const a = oracle::random_antilattice(2 + rng() % 2, rng);
    auto const b = oracle::random_antilattice(2 + rng() % 2, rng);
    auto const p = product(a, b);
    REQUIRE_FALSE(is_irreducible(p));
    REQUIRE_FALSE(is_simple(p));
  }
}
