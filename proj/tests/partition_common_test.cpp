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
#include "unipart/partition_common.hpp"
#include "unipart/union_matroid.hpp"

using namespace unipart;

namespace {

CommonInstance pq(int k) { return CommonInstance(fixtures::p2(), fixtures::q2(), k); }

void check_partition(const CommonInstance& inst, const Partition& p) {
  const auto report = oracle::verify_partition(
      {inst.m1, inst.m2}, inst.k, p, oracle::VerifyMode::kPartition,
      auto_window(inst.size(), inst.k));
  CHECK_MESSAGE(report.passed(), report.first_failure());
}

}  // namespace

TEST_CASE("common removal family examples") {
  CHECK(in_common_removal_family(pq(2), pq(2).all(), 0, ElementSet{0, 3}));
  CHECK_FALSE(in_common_removal_family(pq(2), pq(2).all(), 0, ElementSet{0, 1}));
  CHECK(in_common_removal_family(pq(2), ElementSet{}, 1, ElementSet{}));
  CHECK_THROWS_AS(in_common_removal_family(pq(2), pq(2).all(), 2, ElementSet{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      in_common_removal_family(pq(2), ElementSet{0}, 0, ElementSet{1}),
      std::invalid_argument);
}

TEST_CASE("integral points of the four polyhedra") {
  const auto found =
      four_polyhedra_integral_point(pq(2), pq(2).all(), 0, Window{2, 2});
  REQUIRE(found);
  CHECK((*found == ElementSet{0, 3} || *found == ElementSet{1, 2}));

  // Window [0,0]: the empty set, exactly when F is in both I_i^{k−ℓ−1}.
  oracle::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = oracle::uniform_int(rng, 1, 6);
    const CommonInstance inst(oracle::random_matroid(rng, n),
                              oracle::random_matroid(rng, n),
                              oracle::uniform_int(rng, 1, 3));
    const int ell = oracle::uniform_int(rng, 0, inst.k - 1);
    const auto point =
        four_polyhedra_integral_point(inst, inst.all(), ell, Window{0, 0});
    const int copies = inst.k - ell - 1;
    const bool empty_fits = is_in_union(inst.m1, copies, inst.all()) &&
                            is_in_union(inst.m2, copies, inst.all());
    CHECK(point.has_value() == empty_fits);
    if (point) CHECK(point->empty());
  }
}

TEST_CASE("0/1 points of the four polyhedra are the common removal family") {
  oracle::Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = oracle::uniform_int(rng, 1, 7);
    const CommonInstance inst(oracle::random_matroid(rng, n),
                              oracle::random_matroid(rng, n),
                              oracle::uniform_int(rng, 1, 3));
    // A random residual set, possibly empty.
    const ElementSet f(oracle::uniform_int(rng, 0, (1 << n) - 1));
    const int ell = oracle::uniform_int(rng, 0, inst.k - 1);
    const FourPolyhedra four = four_polyhedra(inst, f, ell, std::nullopt);
    for_each_subset(f, [&](ElementSet x) {
      CHECK(contains_indicator(four.description, extract(x, f)) ==
            in_common_removal_family(inst, f, ell, x));
    });
  }
}

TEST_CASE("nearly uniform common partitions") {
  for (CommonStrategy s : {CommonStrategy::kPolyhedral, CommonStrategy::kExhaustive}) {
    const Partition p = partition_common_nearly_uniform(pq(2), s);
    CHECK(p.canonical().blocks ==
          std::vector<ElementSet>{ElementSet{0, 3}, ElementSet{1, 2}});
    check_partition(pq(2), p);
    const CommonInstance uu(fixtures::u24(), fixtures::u24(), 2);
    const Partition q = partition_common_nearly_uniform(uu, s);
    CHECK(q.sizes() == std::vector<int>{2, 2});
    CHECK_THROWS_AS(partition_common_nearly_uniform(
                        CommonInstance(fixtures::u13(), fixtures::u13(), 2), s),
                    InfeasibleError);
  }
  try {
    partition_common_nearly_uniform(
        CommonInstance(fixtures::u24(), uniform_matroid(4, 1), 2),
        CommonStrategy::kPolyhedral);
    FAIL("expected InfeasibleError");
  } catch (const InfeasibleError& err) {
    CHECK(std::string(err.what()).find("E ∉ I_2^k") != std::string::npos);
  }
}

TEST_CASE("strategies agree with the backtracking oracle") {
  oracle::Rng rng(47);
  int polyhedral_successes = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = oracle::uniform_int(rng, 2, 7);
    CommonInstance inst(oracle::random_matroid(rng, n),
                        oracle::random_matroid(rng, n), 1);
    inst.k = std::max(covering_index(inst.m1), covering_index(inst.m2)) +
             oracle::uniform_int(rng, 0, 1);
    if (inst.k > n) continue;
    CAPTURE(trial);
    const auto brute = oracle::brute_partition_exists(
        {inst.m1, inst.m2}, inst.k, auto_window(n, inst.k));
    if (brute) {
      check_partition(inst, partition_common_nearly_uniform(
                                inst, CommonStrategy::kExhaustive));
    } else {
      CHECK_THROWS_AS(partition_common_nearly_uniform(inst,
                                                      CommonStrategy::kExhaustive),
                      InfeasibleError);
    }
    try {
      const Partition p =
          partition_common_nearly_uniform(inst, CommonStrategy::kPolyhedral);
      check_partition(inst, p);
      CHECK(brute.has_value());
      ++polyhedral_successes;
    } catch (const StepFailure&) {
    }
  }
  CHECK(polyhedral_successes > 0);
}

TEST_CASE("laminar pairs never hit a step failure") {
  oracle::Rng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = oracle::uniform_int(rng, 2, 8);
    CommonInstance inst(oracle::random_laminar(rng, n),
                        oracle::random_laminar(rng, n), 1);
    inst.k = std::max(covering_index(inst.m1), covering_index(inst.m2));
    CAPTURE(trial);
    check_partition(inst, partition_common_nearly_uniform(
                              inst, CommonStrategy::kPolyhedral));
  }
}

TEST_CASE("subpartition examples") {
  const Matroid u24 = fixtures::u24();
  const SubpartitionResult four = subpartition_common(CommonInstance(u24, u24, 4));
  CHECK(four.mu2 == 2);
  REQUIRE(four.subpartition.blocks.size() == 1);
  CHECK(four.subpartition.blocks[0].size() == 1);
  CHECK(four.remainder.size() == 3);
  CHECK(is_in_union(u24, 3, four.remainder));

  const SubpartitionResult three = subpartition_common(CommonInstance(u24, u24, 3));
  CHECK(three.subpartition.blocks.empty());
  CHECK(three.remainder == u24.all());

  CHECK_THROWS_AS(subpartition_common(CommonInstance(u24, u24, 2)),
                  PreconditionError);

  // μ*_2 = 2 for both partition matroids, so k = 3 leaves no blocks.
  const SubpartitionResult pq3 = subpartition_common(pq(3));
  CHECK(pq3.mu2 == 2);
  CHECK(pq3.subpartition.blocks.empty());
  CHECK(pq3.remainder == pq(3).all());
}

TEST_CASE("subpartition orientation and remainder") {
  // U13 has covering index 3, U23 has 2.
  const CommonInstance inst(fixtures::u13(), uniform_matroid(3, 2), 5);
  const SubpartitionResult r = subpartition_common(inst);
  CHECK(r.swapped);
  CHECK(r.mu1 == 2);
  CHECK(r.mu2 == 3);
  CHECK(r.subpartition.blocks.size() == 1);

  oracle::Rng rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = oracle::uniform_int(rng, 2, 8);
    const Matroid a = oracle::random_matroid(rng, n);
    const Matroid b = oracle::random_matroid(rng, n);
    const int mu = std::max(covering_index(a), covering_index(b));
    const int k = mu + oracle::uniform_int(rng, 1, 3);
    const CommonInstance c(a, b, k);
    const SubpartitionResult s = subpartition_common(c);
    CHECK(static_cast<int>(s.subpartition.blocks.size()) == k - s.mu2 - 1);
    const auto report = oracle::verify_partition(
        {a, b}, k, s.subpartition, oracle::VerifyMode::kSubpartition);
    CHECK_MESSAGE(report.passed(), report.first_failure());
  }
}

TEST_CASE("probe records") {
  const auto steps = probe_common(pq(2));
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].uniform_member);
  CHECK(steps[0].integral_point.has_value());
  CHECK(steps[0].window == Window{2, 2});
  const Matroid u24 = fixtures::u24();
  const auto uu = probe_common(CommonInstance(u24, u24, 2));
  REQUIRE(uu.size() == 2);
  CHECK(uu[0].uniform_member);
  CHECK(uu[0].integral_point.has_value());
  CHECK_THROWS_AS(probe_common(CommonInstance(fixtures::u13(), fixtures::u13(), 2)),
                  InfeasibleError);
}

TEST_CASE("an instance with a fractional but no integral point") {
  // K4 against its three perfect matchings. A transversal of the matchings
  // is a star or a triangle, and a star's complement is a triangle, so no
  // common 2-partition exists although E is in both I^2.
  const CommonInstance inst(
      fixtures::k4(),
      partition_matroid(6, {ElementSet{0, 5}, ElementSet{1, 4}, ElementSet{2, 3}},
                        {1, 1, 1}),
      2);
  CHECK_FALSE(oracle::brute_partition_exists({inst.m1, inst.m2}, 2));
  const Window w = auto_window(inst.size(), inst.k);
  CHECK_FALSE(four_polyhedra_integral_point(inst, inst.all(), 0, w));
  const FourPolyhedra four = four_polyhedra(inst, inst.all(), 0, w);
  CHECK(membership(RationalPoint::constant(inst.size(), Rational(1, inst.k)),
                   four.description));
  CHECK_THROWS_AS(
      partition_common_nearly_uniform(inst, CommonStrategy::kPolyhedral),
      StepFailure);
  CHECK_THROWS_AS(
      partition_common_nearly_uniform(inst, CommonStrategy::kExhaustive),
      InfeasibleError);
  CHECK_FALSE(four_polyhedra_integral_point(inst, inst.all(), 0, std::nullopt));
}
