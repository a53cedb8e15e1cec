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

#include <optional>

#include "unipart/element_set.hpp"
#include "unipart/matroid.hpp"
#include "unipart/partition.hpp"

namespace unipart {

/// X ∈ I and E∖X splits into k−1 independent sets (for k = 1: X = E).
bool in_removal_family(const Matroid& m, int k, ElementSet x);

/// Removal-family member X with lo ≤ |X| ≤ hi, chosen by fixing elements in
/// index order (include if an extension still exists, else exclude).
///
/// Feasibility of a partial assignment (In ⊆ X, Out ∩ X = ∅) reduces to one
/// matroid intersection: on R = E∖(In ∪ Out) let A = (M / In)|R and
/// B = (M^{k−1} / Out)|R. A completion Z ⊆ R exists iff A and the dual B*
/// share an independent set of size rank(B*), and then every size in
/// [rank(B*), rank_A(R)] is attainable.
///
/// Throws InfeasibleError if E ∉ I^k or no member fits the window.
ElementSet find_removable(const Matroid& m, int k, int lo, int hi);

/// k disjoint independent sets covering E whose sizes differ by at most one
/// (or lie in `window` when given), built by repeatedly removing a windowed
/// removal-family member and restricting to what is left.
/// Throws InfeasibleError if E ∉ I^k.
Partition partition_nearly_uniform(const Matroid& m, int k,
                                   std::optional<Window> window = std::nullopt);

}  // namespace unipart
