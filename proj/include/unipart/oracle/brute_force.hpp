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
#include <string>
#include <vector>

#include "unipart/element_set.hpp"
#include "unipart/matroid.hpp"
#include "unipart/partition.hpp"

// Exhaustive reference implementations. Nothing here calls into the
// union-rank, polyhedra or partition code it is used to check.
namespace unipart::oracle {

inline constexpr int kBruteUnionMaxElements = 14;

/// Largest |U| with U ⊆ X a union of k independent sets, by memoized
/// recursion: best_k(X) = max over independent I ⊆ X of |I| + best_{k−1}(X∖I).
/// Requires n ≤ 14 and k ≥ 0.
int brute_union_rank(const Matroid& m, int k, ElementSet x);

/// brute_union_rank for every subset of E, indexed by mask.
std::vector<int> brute_union_rank_table(const Matroid& m, int k);

/// A partition of E into k sets independent in every given matroid, with
/// sizes in `window` when given. Elements are placed in index order, each
/// into the first block that accepts it, so the answer is deterministic.
/// Requires 1 to 2 matroids on one ground set, n ≤ 12 and 1 ≤ k ≤ 12.
std::optional<Partition> brute_partition_exists(
    const std::vector<Matroid>& matroids, int k,
    std::optional<Window> window = std::nullopt);

enum class VerifyMode { kPartition, kSubpartition };

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool passed() const;
  /// First failing check rendered as "name: detail", or "".
  std::string first_failure() const;
};

/// Checks a claimed (sub)partition against every matroid:
///   partition mode: exactly k blocks, pairwise disjoint, covering E;
///   subpartition mode: at most k blocks, pairwise disjoint, and the
///   remainder E∖∪X_j lies in I_i^{k−|blocks|} for every matroid;
/// in both modes every block independent in every matroid and sizes inside
/// `window` when given. Spread ≤ 1 is checked unless a window wider than
/// one is given.
/// Throws std::invalid_argument when k < 1 or the matroid list is malformed.
VerificationReport verify_partition(const std::vector<Matroid>& matroids, int k,
                                    const Partition& candidate, VerifyMode mode,
                                    std::optional<Window> window = std::nullopt);

/// Lower bound used by check_hull_equivalence.
enum class HullForm {
  /// g(X) = |X| − ρ^{k−1}(X).
  kCospanning,
  /// g(X) = ρ^{k−1}(E) − ρ^{k−1}(E∖X).
  kSpanning,
};

struct HullDiscrepancy {
  ElementSet set;
  bool in_polytope = false;
  bool in_family = false;
};

struct HullReport {
  int copies = 0;
  HullForm form = HullForm::kCospanning;
  /// Subsets X with χ_X ∈ P(ρ) ∩ P(g), in mask order.
  std::vector<ElementSet> polytope_members;
  std::vector<HullDiscrepancy> discrepancies;

  bool passed() const { return discrepancies.empty(); }
};

/// For every X ⊆ E compares "χ_X satisfies x(Y) ≤ ρ(Y) and x(Y) ≥ g(Y) for
/// all Y" with "X ∈ I and E∖X ∈ I^{k−1}". Requires n ≤ 7 and E ∈ I^k.
HullReport check_hull_equivalence(const Matroid& m, int k,
                                  HullForm form = HullForm::kCospanning);

struct AxiomReport {
  bool passed = true;
  /// Empty when passed.
  std::string counterexample;
};

/// Normalization, unit increase, monotonicity and submodularity over all
/// pairs of a rank table of size 2^n. Requires n ≤ 12.
AxiomReport check_rank_axioms(int n, const std::vector<int>& table);
AxiomReport check_matroid_axioms(const Matroid& m);

/// max over nonempty X of ⌈|X| / ρ(X)⌉, by enumeration. Requires a
/// loop-free matroid with n ≤ 20.
int brute_covering_index(const Matroid& m);

}  // namespace unipart::oracle
