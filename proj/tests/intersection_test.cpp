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
#include "unipart/intersection.hpp"

using namespace unipart;

namespace {

int largest_common_by_search(const Matroid& a, const Matroid& b) {
  int best = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << a.size()); ++x) {
    const ElementSet s(x);
    if (a.is_independent(s) && b.is_independent(s)) {
      best = std::max(best, s.size());
    }
  }
  return best;
}

RankFunction rank_of(const Matroid& m) {
  return [m](ElementSet x) { return m.rank(x); };
}

}  // namespace

TEST_CASE("partition matroids with crossing blocks") {
  const ElementSet j = max_common_independent(
      fixtures::p2().all(), rank_of(fixtures::p2()), rank_of(fixtures::q2()));
  CHECK(j.size() == 2);
  CHECK(fixtures::p2().is_independent(j));
  CHECK(fixtures::q2().is_independent(j));
}

TEST_CASE("maximum size matches exhaustive search") {
  oracle::Rng rng(123);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = oracle::uniform_int(rng, 1, 8);
    const Matroid a = oracle::random_matroid(rng, n, true);
    const Matroid b = oracle::random_matroid(rng, n, true);
    CAPTURE(trial);
    const ElementSet j = max_common_independent(a.all(), rank_of(a), rank_of(b));
    CHECK(a.is_independent(j));
    CHECK(b.is_independent(j));
    CHECK(j.size() == largest_common_by_search(a, b));
  }
}

TEST_CASE("restricted ground set") {
  const Matroid k4 = fixtures::k4();
  const ElementSet ground{0, 1, 3};
  const ElementSet j = max_common_independent(ground, rank_of(k4),
                                              rank_of(fixtures::k4()));
  CHECK(j.subset_of(ground));
  CHECK(j.size() == 2);
}
