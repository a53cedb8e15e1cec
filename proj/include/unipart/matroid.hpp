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

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unipart/element_set.hpp"

namespace unipart {

/// Ground set {0, ..., n-1} with optional display labels.
class GroundSet {
 public:
  explicit GroundSet(int n, std::vector<std::string> labels = {});

  int size() const { return n_; }
  ElementSet all() const { return ElementSet::full(n_); }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of e, or its index rendered as text.
  std::string label(int e) const;

 private:
  int n_;
  std::vector<std::string> labels_;
};

enum class MatroidKind {
  kUniform,
  kPartition,
  kLaminar,
  kGraphic,
  kExplicit,
  kDual,
  kRestriction,
};

std::string to_string(MatroidKind kind);

namespace detail {

/// Rank evaluator behind a Matroid. Implementations are immutable.
class RankOracle {
 public:
  virtual ~RankOracle() = default;
  /// `set` is guaranteed to lie inside the ground set.
  virtual int rank(ElementSet set) const = 0;
};

}  // namespace detail

/// An immutable matroid accessed through its rank function. Copies share the
/// underlying oracle.
class Matroid {
 public:
  Matroid(GroundSet ground, MatroidKind kind,
          std::shared_ptr<const detail::RankOracle> oracle);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  ElementSet all() const { return ground_.all(); }
  MatroidKind kind() const { return kind_; }

  /// Throws std::out_of_range if `set` leaves the ground set.
  int rank(ElementSet set) const;
  bool is_independent(ElementSet set) const {
    return rank(set) == set.size();
  }
  /// rank(E).
  int full_rank() const { return rank(all()); }
  /// Elements e with rank({e}) = 0.
  ElementSet loops() const;
  /// Same matroid with new display labels.
  Matroid relabeled(std::vector<std::string> labels) const;

 private:
  GroundSet ground_;
  MatroidKind kind_;
  std::shared_ptr<const detail::RankOracle> oracle_;
};

struct LaminarConstraint {
  ElementSet set;
  int capacity = 0;
};

/// rank(X) = min(|X|, r).
Matroid uniform_matroid(int n, int r);

/// At most caps[i] elements from blocks[i]; elements outside every block are
/// unconstrained.
Matroid partition_matroid(int n, std::vector<ElementSet> blocks,
                          std::vector<int> caps);

/// At most `capacity` elements from each member of a laminar family. Throws
/// std::invalid_argument when two members cross.
Matroid laminar_matroid(int n, std::vector<LaminarConstraint> constraints);

/// Cycle matroid of a multigraph; element i is edges[i]. Self-loops are loops.
Matroid graphic_matroid(int vertices, std::vector<std::pair<int, int>> edges);

/// Maximum number of elements for which explicit tables are axiom-checked.
inline constexpr int kAxiomCheckCap = 12;

/// Matroid from a rank table indexed by subset mask (size 2^n). Tables with
/// n ≤ kAxiomCheckCap are validated against the rank axioms.
Matroid explicit_matroid_from_ranks(int n, std::vector<int> rank_table);

/// Matroid whose independent sets are all subsets of the listed sets.
Matroid explicit_matroid_from_independent_sets(
    int n, const std::vector<ElementSet>& independent_sets);

/// rank*(X) = |X| − rank(E) + rank(E∖X). dual(dual(M)) has M's rank table.
Matroid dual(const Matroid& m);

/// Restriction to `subset`, re-indexed so the i-th smallest member of
/// `subset` becomes element i. Labels follow the parent's elements.
Matroid restrict(const Matroid& m, ElementSet subset);

/// Full rank table, indexed by mask. Requires n ≤ 20.
std::vector<int> rank_table(const Matroid& m);

/// First rank-axiom violation found in a table (normalization, unit increase,
/// monotonicity, local submodularity), or nullopt.
std::optional<std::string> find_rank_axiom_violation(
    int n, const std::vector<int>& table);

}  // namespace unipart
