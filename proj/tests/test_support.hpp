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

#pragma once

#include <random>
#include <vector>

#include "unipart/matroid.hpp"
#include "unipart/oracle/fixtures.hpp"
#include "unipart/oracle/generators.hpp"
#include "unipart/set_function.hpp"

namespace unipart::testing {

/// Rational in [lo, hi] with a small denominator.
inline Rational sample_rational(oracle::Rng& rng, int lo, int hi,
                                int max_den = 6) {
  const int den = oracle::uniform_int(rng, 1, max_den);
  const int num = oracle::uniform_int(rng, lo * den, hi * den);
  return Rational(num, den);
}

inline RationalPoint sample_point(oracle::Rng& rng, int n, int lo, int hi) {
  std::vector<Rational> coords;
  for (int i = 0; i < n; ++i) coords.push_back(sample_rational(rng, lo, hi));
  return RationalPoint(std::move(coords));
}

/// Independent sets by enumeration of all subsets, directly from ranks.
inline std::vector<ElementSet> independent_sets(const Matroid& m) {
  std::vector<ElementSet> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m.size()); ++x) {
    if (m.rank(ElementSet(x)) == std::popcount(x)) out.push_back(ElementSet(x));
  }
  return out;
}

}  // namespace unipart::testing
