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

#include <functional>

#include "unipart/element_set.hpp"

namespace unipart {

/// Rank oracle on subsets of some ground set.
using RankFunction = std::function<int(ElementSet)>;

/// A maximum-cardinality set J ⊆ ground independent in both matroids, by
/// shortest augmenting paths in the exchange graph. Ties are broken toward
/// lower element indices.
ElementSet max_common_independent(ElementSet ground, const RankFunction& rank_a,
                                  const RankFunction& rank_b);

}  // namespace unipart
