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

#include <vector>

#include "unipart/element_set.hpp"
#include "unipart/matroid.hpp"

namespace unipart {

/// Ground sets up to this size evaluate rank^k by exhaustive minimization.
inline constexpr int kUnionRankExhaustiveCap = 20;

/// k pairwise-disjoint independent sets (some possibly empty).
struct Coloring {
  std::vector<ElementSet> blocks;

  ElementSet covered() const;
};

/// Result of the matroid-partition augmenting-path algorithm on X.
struct UnionDecomposition {
  /// Disjoint independent blocks covering a maximum-size subset of X.
  Coloring coloring;
  /// Elements of X left uncolored.
  ElementSet uncovered;
  /// Y ⊆ X with |X∖Y| + k·rank(Y) = |covered|, certifying maximality.
  ElementSet certificate;
};

/// Largest union of k independent subsets of X, together with a min-max
/// certificate. Polynomial in |X| and k (independence-oracle calls only).
/// k = 0 yields an empty coloring.
UnionDecomposition max_union_coloring(const Matroid& m, int k, ElementSet x);

/// rank^k(X) = min over Y ⊆ X of |X∖Y| + k·rank(Y). Exhaustive when
/// |X| ≤ exhaustive_cap, otherwise read off max_union_coloring.
int union_rank(const Matroid& m, int k, ElementSet x,
               int exhaustive_cap = kUnionRankExhaustiveCap);

/// X ∈ I^k. By convention I^0 = {∅}.
bool is_in_union(const Matroid& m, int k, ElementSet x);

/// A valid k-coloring of X. Throws InfeasibleError carrying a set Y with
/// |X∖Y| + k·rank(Y) < |X| when X ∉ I^k.
Coloring color_into_independent(const Matroid& m, int k, ElementSet x);

/// μ* = min{μ : E ∈ I^μ}. Throws PreconditionError if the matroid has a loop.
int covering_index(const Matroid& m);

/// rank^k on every subset of E (n ≤ 20), filled in O(n·2^n) rank lookups via
/// h(X) = min(k·rank(X), 1 + min over e ∈ X of h(X − e)).
class UnionRankTable {
 public:
  UnionRankTable(const Matroid& m, int k);
  UnionRankTable(const std::vector<int>& rank_table, int n, int k);

  int operator()(ElementSet x) const { return table_[x.bits()]; }
  int copies() const { return k_; }
  int size() const { return n_; }
  const std::vector<int>& values() const { return table_; }

 private:
  int n_;
  int k_;
  std::vector<int> table_;
};

}  // namespace unipart
