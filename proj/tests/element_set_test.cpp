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

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "unipart/element_set.hpp"

using unipart::ElementSet;

TEST_CASE("construction and queries") {
  const ElementSet s{0, 3};
  CHECK(s.bits() == 0b1001);
  CHECK(s.size() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(1));
  CHECK(s.span_width() == 4);
  CHECK(s.to_string() == "{0,3}");
  CHECK(ElementSet().to_string() == "{}");
  CHECK(ElementSet::full(4).bits() == 0b1111);
  CHECK(ElementSet::full(64).size() == 64);
  CHECK(s.elements() == std::vector<int>{0, 3});
}

TEST_CASE("duplicates and range are rejected") {
  const std::vector<int> dup{1, 1};
  CHECK_THROWS_AS(ElementSet::from_elements(dup), std::invalid_argument);
  const std::vector<int> big{64};
  CHECK_THROWS_AS(ElementSet::from_elements(big), std::out_of_range);
  const std::vector<int> neg{-1};
  CHECK_THROWS_AS(ElementSet::from_elements(neg), std::out_of_range);
}

TEST_CASE("set algebra") {
  const ElementSet a{0, 1, 2};
  const ElementSet b{1, 3};
  CHECK((a | b) == ElementSet{0, 1, 2, 3});
  CHECK((a & b) == ElementSet{1});
  CHECK((a - b) == ElementSet{0, 2});
  CHECK(ElementSet{1}.subset_of(a));
  CHECK_FALSE(b.subset_of(a));
  CHECK(a.with(5).contains(5));
  CHECK_FALSE(a.without(0).contains(0));
}

TEST_CASE("deposit and extract are inverse on the support") {
  const ElementSet support{1, 4, 6};
  CHECK(unipart::deposit(ElementSet{0, 2}, support) == ElementSet{1, 6});
  CHECK(unipart::extract(ElementSet{1, 2, 6}, support) == ElementSet{0, 2});
  for (std::uint64_t local = 0; local < 8; ++local) {
    const ElementSet l(local);
    CHECK(unipart::extract(unipart::deposit(l, support), support) == l);
  }
}

TEST_CASE("for_each_subset visits every subset once in mask order") {
  const ElementSet set{0, 2, 5};
  std::vector<std::uint64_t> seen;
  unipart::for_each_subset(set, [&](ElementSet s) { seen.push_back(s.bits()); });
  REQUIRE(seen.size() == 8);
  for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i - 1] < seen[i]);
  for (std::uint64_t s : seen) CHECK(ElementSet(s).subset_of(set));
}
