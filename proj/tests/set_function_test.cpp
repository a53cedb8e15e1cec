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

#include "doctest.h"
#include "unipart/set_function.hpp"

using namespace unipart;

TEST_CASE("tables are validated") {
  CHECK_THROWS_AS(SetFunction(2, {0, 1, 1}, Modularity::kSubmodular),
                  std::invalid_argument);
  CHECK_THROWS_AS(SetFunction(1, {1, 1}, Modularity::kSubmodular),
                  std::invalid_argument);
  CHECK_THROWS_AS(SetFunction::zero(21, Modularity::kSubmodular),
                  std::invalid_argument);
  CHECK_NOTHROW(SetFunction::zero(0, Modularity::kSubmodular));
}

TEST_CASE("integer tables are cached, rational ones are not") {
  const SetFunction ints =
      SetFunction::from_ints(2, {0, 1, 1, 2}, Modularity::kSubmodular);
  REQUIRE(ints.integer_table() != nullptr);
  CHECK((*ints.integer_table())[3] == 2);
  const SetFunction half(1, {0, Rational(1, 2)}, Modularity::kSubmodular);
  CHECK(half.integer_table() == nullptr);
  CHECK(half(ElementSet{0}) == Rational(1, 2));
}

TEST_CASE("modularity checks") {
  // min(|X|, 1) on two elements.
  const SetFunction rank =
      SetFunction::from_ints(2, {0, 1, 1, 1}, Modularity::kSubmodular);
  CHECK(rank.is_submodular());
  CHECK_FALSE(rank.is_supermodular());
  const SetFunction square = SetFunction::from_callable(
      3, [](ElementSet x) { return Rational(x.size() * x.size()); },
      Modularity::kSupermodular);
  CHECK(square.is_supermodular());
  CHECK_FALSE(square.is_submodular());
  const SetFunction modular = SetFunction::from_callable(
      3, [](ElementSet x) { return Rational(x.size()); }, Modularity::kUnknown);
  CHECK(modular.is_submodular());
  CHECK(modular.is_supermodular());
}

TEST_CASE("points") {
  const RationalPoint p(std::vector<Rational>{Rational(1, 2), 2, Rational(-1, 3)});
  CHECK(p.sum(ElementSet{0, 2}) == Rational(1, 6));
  const auto sums = p.subset_sums();
  for (std::uint64_t x = 0; x < 8; ++x) CHECK(sums[x] == p.sum(ElementSet(x)));
  CHECK(RationalPoint::indicator(3, ElementSet{1}).to_string() == "(0,1,0)");
  CHECK(RationalPoint::constant(2, Rational(1, 4)).to_string() == "(1/4,1/4)");
}
