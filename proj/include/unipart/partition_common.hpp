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
#include <vector>

#include "unipart/element_set.hpp"
#include "unipart/matroid.hpp"
#include "unipart/partition.hpp"
#include "unipart/polyhedra.hpp"

namespace unipart {

/// Two matroids on one ground set and a block count k ≥ 1.
struct CommonInstance {
  Matroid m1;
  Matroid m2;
  int k;

  /// Throws std::invalid_argument on mismatched ground sets or k < 1.
  CommonInstance(Matroid first, Matroid second, int blocks);

  int size() const { return m1.size(); }
  ElementSet all() const { return m1.all(); }
};

/// X ∈ F_1^ℓ(F) ∩ F_2^ℓ(F): X ⊆ F is independent in both matroids and, in
/// each, F∖X splits into k−ℓ−1 independent sets.
bool in_common_removal_family(const CommonInstance& inst, ElementSet residual,
                              int ell, ElementSet x);

/// P(ρ_1^F) ∩ P(g_1) ∩ P(ρ_2^F) ∩ P(g_2) over R^F, with ρ_i^F the rank of the
/// restriction to F and g_i(X) = |X| − (ρ_i^F)^{k−ℓ−1}(X), optionally
/// intersected with a window on x(F). Local coordinate i is the i-th smallest
/// element of F.
struct FourPolyhedra {
  ElementSet residual;
  int ell;
  PolyhedronDescription description;
};

FourPolyhedra four_polyhedra(const CommonInstance& inst, ElementSet residual,
                             int ell, std::optional<Window> window,
                             RemovalBound bound = RemovalBound::kCospanning);

/// Some X* ⊆ F with χ_{X*} in the (windowed) four-polyhedra intersection,
/// scanning sizes upward and each size in colex order. Every returned set is
/// checked against in_common_removal_family.
std::optional<ElementSet> four_polyhedra_integral_point(
    const CommonInstance& inst, ElementSet residual, int ell,
    std::optional<Window> window);

enum class CommonStrategy { kPolyhedral, kExhaustive };

/// k disjoint common independent sets covering E with sizes in the window
/// (default [⌊|E|/k⌋, ⌈|E|/k⌉]).
///
/// Throws InfeasibleError when E ∉ I_1^k ∩ I_2^k (or, for kExhaustive, when
/// no windowed partition exists) and StepFailure when the polyhedral
/// strategy finds no integral point at some step.
Partition partition_common_nearly_uniform(
    const CommonInstance& inst, CommonStrategy strategy,
    std::optional<Window> window = std::nullopt);

struct SubpartitionResult {
  Partition subpartition;
  ElementSet remainder;
  /// Covering indices in the orientation used (mu1 ≤ mu2).
  int mu1 = 0;
  int mu2 = 0;
  /// True when the input matroids were swapped to get mu1 ≤ mu2.
  bool swapped = false;
  Window window;
};

/// k − μ*_2 − 1 disjoint common independent sets of near-equal size whose
/// removal leaves a set in I_1^{μ*_2+1} ∩ I_2^{μ*_2+1}.
/// Throws PreconditionError when μ*_2 ≥ k, InfeasibleError when
/// E ∉ I_1^k ∩ I_2^k.
SubpartitionResult subpartition_common(const CommonInstance& inst);

/// One step of the polyhedral procedure, as recorded by the probe.
struct ProbeStep {
  ElementSet residual;
  int ell = 0;
  Window window;
  /// (1/(k−ℓ), …, 1/(k−ℓ)) lies in the windowed four-polyhedra intersection.
  bool uniform_member = false;
  std::optional<ElementSet> integral_point;
};

/// Runs the polyhedral procedure, recording every step until it completes or
/// a step has no integral point. Throws InfeasibleError when
/// E ∉ I_1^k ∩ I_2^k.
std::vector<ProbeStep> probe_common(const CommonInstance& inst,
                                    std::optional<Window> window = std::nullopt);

}  // namespace unipart
