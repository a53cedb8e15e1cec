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

#include <cstdint>
#include <random>

#include "unipart/matroid.hpp"

// Seeded random instances for property tests. The same seed gives the same
// matroid on every run of the same build.
namespace unipart::oracle {

using Rng = std::mt19937_64;

/// U_{r,n} with 1 ≤ r ≤ n.
Matroid random_uniform(Rng& rng, int n);
/// Random blocks with capacities ≥ 1; some elements may be unconstrained.
Matroid random_partition(Rng& rng, int n);
/// Laminar family from recursive splitting, every capacity ≥ 1.
Matroid random_laminar(Rng& rng, int n);
/// Random multigraph with n edges and no self-loops.
Matroid random_graphic(Rng& rng, int n);
/// Dual of one of the four kinds above. May have loops.
Matroid random_dual(Rng& rng, int n);
/// Restriction of a larger random matroid to n of its elements.
Matroid random_restriction(Rng& rng, int n);

/// Any of the above, redrawn until loop-free unless allow_loops is set.
Matroid random_matroid(Rng& rng, int n, bool allow_loops = false);

/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

}  // namespace unipart::oracle
