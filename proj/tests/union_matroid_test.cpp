// Copyright 2026 The Authors.
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

#include "doctest.h"
#include "test_support.hpp"
#include "unipart/errors.hpp"
#include "unipart/oracle/brute_force.hpp"
#include "unipart/union_matroid.hpp"

using namespace unipart;

namespace {

void check_coloring(const Matroid& m, int k, ElementSet x, const Coloring& c) {
  REQUIRE(static_cast<int>(c.blocks.size()) == k);
  ElementSet seen;
  for (ElementSet b : c.blocks) {
    CHECK((seen & b).empty());
    CHECK(m.is_independent(b));
    seen = seen | b;
  }
  CHECK(seen == x);
}

}  // namespace

TEST_CASE("union rank examples") {
  CHECK(union_rank(fixtures::u24(), 2, fixtures::u24().all()) == 4);
  CHECK(union_rank(fixtures::u13(), 2, fixtures::u13().all()) == 2);
  for (const auto& [name, m] : fixtures::all()) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << m.size()); ++x) {
      CHECK(union_rank(m, 1, ElementSet(x)) == m.rank(ElementSet(x)));
    }
  }
}

TEST_CASE("membership examples") {
  CHECK(is_in_union(fixtures::u24(), 2, fixtures::u24().all()));
  CHECK_FALSE(is_in_union(fixtures::u13(), 2, fixtures::u13().all()));
  for (const auto& [name, m] : fixtures::all()) {
    CHECK(is_in_union(m, 3, ElementSet{}));
  }
  CHECK(is_in_union(fixtures::u24(), 0, ElementSet{}));
  CHECK_FALSE(is_in_union(fixtures::u24(), 0, ElementSet{1}));
}

TEST_CASE("union rank equals the exhaustive oracle on fixtures and samples") {
  std::vector<std::pair<std::string, Matroid>> pool = fixtures::all();
  oracle::Rng rng(7);
  for (int i = 0; i < 25; ++i) {
    pool.emplace_back("random" + std::to_string(i),
                      oracle::random_matroid(rng, oracle::uniform_int(rng, 1, 8),
                                             true));
  }
  for (const auto& [name, m] : pool) {
    CAPTURE(name);
    for (int k = 1; k <= 4; ++k) {
      const auto brute = oracle::brute_union_rank_table(m, k);
      const UnionRankTable table(m, k);
      for (std::uint64_t x = 0; x < brute.size(); ++x) {
        const ElementSet s(x);
        CHECK(union_rank(m, k, s) == brute[x]);
        CHECK(union_rank(m, k, s, /*exhaustive_cap=*/0) == brute[x]);
        CHECK(table(s) == brute[x]);
      }
    }
  }
}

TEST_CASE("union rank is a matroid rank and grows with k") {
  oracle::Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Matroid m = oracle::random_matroid(rng, oracle::uniform_int(rng, 1, 8),
                                             true);
    for (int k = 1; k <= 3; ++k) {
      const UnionRankTable lower(m, k);
      const UnionRankTable upper(m, k + 1);
      CHECK(oracle::check_rank_axioms(m.size(), lower.values()).passed);
      for (std::size_t x = 0; x < lower.values().size(); ++x) {
        CHECK(lower.values()[x] <= upper.values()[x]);
      }
    }
  }
}

TEST_CASE("colorings are valid and infeasibility carries a certificate") {
  const Coloring u = color_into_independent(fixtures::u24(), 2,
                                            fixtures::u24().all());
  check_coloring(fixtures::u24(), 2, fixtures::u24().all(), u);
  const Coloring s = color_into_independent(fixtures::u13(), 3,
                                            fixtures::u13().all());
  check_coloring(fixtures::u13(), 3, fixtures::u13().all(), s);
  for (ElementSet b : s.blocks) CHECK(b.size() == 1);

  const Matroid k4 = fixtures::k4();
  const Coloring trees = color_into_independent(k4, 2, k4.all());
  check_coloring(k4, 2, k4.all(), trees);
  for (ElementSet b : trees.blocks) CHECK(k4.rank(b) == 3);

  try {
    color_into_independent(fixtures::u13(), 2, fixtures::u13().all());
    FAIL("expected InfeasibleError");
  } catch (const InfeasibleError& err) {
    REQUIRE(err.certificate().has_value());
    const ElementSet y = *err.certificate();
    const ElementSet e = fixtures::u13().all();
    CHECK((e - y).size() + 2 * fixtures::u13().rank(y) < e.size());
    CHECK(std::string(err.what()).find("E ∉ I^k") != std::string::npos);
  }
}

TEST_CASE("max union coloring certificate is tight") {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Matroid m = oracle::random_matroid(rng, oracle::uniform_int(rng, 1, 9),
                                             true);
    const int k = oracle::uniform_int(rng, 1, 3);
    const UnionDecomposition d = max_union_coloring(m, k, m.all());
    const ElementSet covered = d.coloring.covered();
    CHECK((covered & d.uncovered).empty());
    CHECK((covered | d.uncovered) == m.all());
    const ElementSet y = d.certificate;
    CHECK((m.all() - y).size() + k * m.rank(y) == covered.size());
    for (ElementSet b : d.coloring.blocks) CHECK(m.is_independent(b));
  }
}

TEST_CASE("covering index") {
  CHECK(covering_index(fixtures::u24()) == 2);
  CHECK(covering_index(fixtures::u13()) == 3);
  CHECK(covering_index(fixtures::k4()) == 2);
  CHECK_THROWS_AS(covering_index(graphic_matroid(2, {{0, 1}, {1, 1}})),
                  PreconditionError);
  oracle::Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Matroid m = oracle::random_matroid(rng, oracle::uniform_int(rng, 1, 8));
    const int mu = covering_index(m);
    CHECK(mu == oracle::brute_covering_index(m));
    CHECK(is_in_union(m, mu, m.all()));
    CHECK_FALSE(is_in_union(m, mu - 1, m.all()));
  }
}
