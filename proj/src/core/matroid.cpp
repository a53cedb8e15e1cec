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

#include "unipart/matroid.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace unipart {

GroundSet::GroundSet(int n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 1 || n > kMaxElements) {
    throw std::invalid_argument("ground set size must be in [1, 64], got " +
                                std::to_string(n));
  }
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != n) {
      throw std::invalid_argument("expected " + std::to_string(n) +
                                  " labels, got " +
                                  std::to_string(labels_.size()));
    }
    std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
    if (static_cast<int>(seen.size()) != n) {
      throw std::invalid_argument("element labels must be distinct");
    }
  }
}

std::string GroundSet::label(int e) const {
  return labels_.empty() ? std::to_string(e) : labels_.at(e);
}

std::string to_string(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kUniform:
      return "uniform";
    case MatroidKind::kPartition:
      return "partition";
    case MatroidKind::kLaminar:
      return "laminar";
    case MatroidKind::kGraphic:
      return "graphic";
    case MatroidKind::kExplicit:
      return "explicit";
    case MatroidKind::kDual:
      return "dual-of";
    case MatroidKind::kRestriction:
      return "restriction-of";
  }
  return "unknown";
}

Matroid::Matroid(GroundSet ground, MatroidKind kind,
                 std::shared_ptr<const detail::RankOracle> oracle)
    : ground_(std::move(ground)), kind_(kind), oracle_(std::move(oracle)) {}

int Matroid::rank(ElementSet set) const {
  if (!set.subset_of(all())) {
    throw std::out_of_range("set " + set.to_string() +
                            " leaves the ground set of size " +
                            std::to_string(size()));
  }
  return oracle_->rank(set);
}

ElementSet Matroid::loops() const {
  ElementSet out;
  for (int e = 0; e < size(); ++e) {
    if (oracle_->rank(ElementSet::singleton(e)) == 0) out.insert(e);
  }
  return out;
}

Matroid Matroid::relabeled(std::vector<std::string> labels) const {
  return Matroid(GroundSet(size(), std::move(labels)), kind_, oracle_);
}

namespace {

void check_in_ground(ElementSet set, int n, const char* what) {
  if (!set.subset_of(ElementSet::full(n))) {
    throw std::invalid_argument(std::string(what) + " " + set.to_string() +
                                " leaves the ground set");
  }
}

class UniformOracle final : public detail::RankOracle {
 public:
  explicit UniformOracle(int r) : r_(r) {}
  int rank(ElementSet set) const override { return std::min(set.size(), r_); }

 private:
  int r_;
};

class PartitionOracle final : public detail::RankOracle {
 public:
  PartitionOracle(std::vector<ElementSet> blocks, std::vector<int> caps,
                  ElementSet free)
      : blocks_(std::move(blocks)), caps_(std::move(caps)), free_(free) {}

  int rank(ElementSet set) const override {
    int r = (set & free_).size();
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      r += std::min((set & blocks_[i]).size(), caps_[i]);
    }
    return r;
  }

 private:
  std::vector<ElementSet> blocks_;
  std::vector<int> caps_;
  ElementSet free_;
};

// Members sorted by size ascending; parent_[i] is the smallest later member
// containing member i, or -1 for roots.
class LaminarOracle final : public detail::RankOracle {
 public:
  LaminarOracle(std::vector<LaminarConstraint> members, ElementSet uncovered)
      : members_(std::move(members)), uncovered_(uncovered) {
    const std::size_t m = members_.size();
    parent_.assign(m, -1);
    own_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (members_[i].set.subset_of(members_[j].set)) {
          parent_[i] = static_cast<int>(j);
          break;
        }
      }
    }
    for (std::size_t i = 0; i < m; ++i) own_[i] = members_[i].set;
    for (std::size_t i = 0; i < m; ++i) {
      if (parent_[i] >= 0) own_[parent_[i]] = own_[parent_[i]] - members_[i].set;
    }
  }

  int rank(ElementSet set) const override {
    std::vector<int> count(members_.size(), 0);
    int r = (set & uncovered_).size();
    for (std::size_t i = 0; i < members_.size(); ++i) {
      count[i] = std::min(count[i] + (set & own_[i]).size(),
                          members_[i].capacity);
      if (parent_[i] >= 0) {
        count[parent_[i]] += count[i];
      } else {
        r += count[i];
      }
    }
    return r;
  }

 private:
  std::vector<LaminarConstraint> members_;
  ElementSet uncovered_;
  std::vector<int> parent_;
  std::vector<ElementSet> own_;
};

class GraphicOracle final : public detail::RankOracle {
 public:
  GraphicOracle(int vertices, std::vector<std::pair<int, int>> edges)
      : vertices_(vertices), edges_(std::move(edges)) {}

  int rank(ElementSet set) const override {
    std::vector<int> parent(vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    int r = 0;
    for (int e : set.elements()) {
      const int a = find(edges_[e].first);
      const int b = find(edges_[e].second);
      if (a != b) {
        parent[a] = b;
        ++r;
      }
    }
    return r;
  }

 private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
};

class TableOracle final : public detail::RankOracle {
 public:
  explicit TableOracle(std::vector<int> table) : table_(std::move(table)) {}
  int rank(ElementSet set) const override { return table_[set.bits()]; }

 private:
  std::vector<int> table_;
};

class DualOracle final : public detail::RankOracle {
 public:
  explicit DualOracle(Matroid base)
      : base_(std::move(base)), full_rank_(base_.full_rank()) {}
  int rank(ElementSet set) const override {
    return set.size() - full_rank_ + base_.rank(base_.all() - set);
  }

 private:
  Matroid base_;
  int full_rank_;
};

class RestrictionOracle final : public detail::RankOracle {
 public:
  RestrictionOracle(Matroid base, ElementSet support)
      : base_(std::move(base)), support_(support) {}
  int rank(ElementSet set) const override {
    return base_.rank(deposit(set, support_));
  }

 private:
  Matroid base_;
  ElementSet support_;
};

constexpr int kTableCap = 20;

void require_table_size(int n) {
  if (n > kTableCap) {
    throw std::invalid_argument("rank tables need n <= 20, got " +
                                std::to_string(n));
  }
}

}  // namespace

Matroid uniform_matroid(int n, int r) {
  if (r < 0) throw std::invalid_argument("uniform rank must be >= 0");
  return Matroid(GroundSet(n), MatroidKind::kUniform,
                 std::make_shared<UniformOracle>(std::min(r, n)));
}

Matroid partition_matroid(int n, std::vector<ElementSet> blocks,
                          std::vector<int> caps) {
  GroundSet ground(n);
  if (blocks.size() != caps.size()) {
    throw std::invalid_argument("partition matroid needs one cap per block");
  }
  ElementSet covered;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    check_in_ground(blocks[i], n, "block");
    if (caps[i] < 0) throw std::invalid_argument("capacity < 0");
    if (!(covered & blocks[i]).empty()) {
      throw std::invalid_argument("partition blocks must be disjoint");
    }
    covered = covered | blocks[i];
  }
  const ElementSet free = ground.all() - covered;
  return Matroid(std::move(ground), MatroidKind::kPartition,
                 std::make_shared<PartitionOracle>(std::move(blocks),
                                                   std::move(caps), free));
}

Matroid laminar_matroid(int n, std::vector<LaminarConstraint> constraints) {
  GroundSet ground(n);
  ElementSet covered;
  for (const auto& c : constraints) {
    check_in_ground(c.set, n, "laminar member");
    if (c.capacity < 0) throw std::invalid_argument("capacity < 0");
    covered = covered | c.set;
  }
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    for (std::size_t j = i + 1; j < constraints.size(); ++j) {
      const ElementSet a = constraints[i].set;
      const ElementSet b = constraints[j].set;
      if (!(a & b).empty() && !a.subset_of(b) && !b.subset_of(a)) {
        throw std::invalid_argument("family is not laminar: " + a.to_string() +
                                    " crosses " + b.to_string());
      }
    }
  }
  std::stable_sort(constraints.begin(), constraints.end(),
                   [](const LaminarConstraint& a, const LaminarConstraint& b) {
                     return a.set.size() < b.set.size();
                   });
  return Matroid(std::move(ground), MatroidKind::kLaminar,
                 std::make_shared<LaminarOracle>(std::move(constraints),
                                                 ElementSet::full(n) - covered));
}

Matroid graphic_matroid(int vertices, std::vector<std::pair<int, int>> edges) {
  if (vertices < 1) throw std::invalid_argument("graph needs a vertex");
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw std::invalid_argument("edge endpoint outside [0, vertices)");
    }
  }
  GroundSet ground(static_cast<int>(edges.size()));
  return Matroid(std::move(ground), MatroidKind::kGraphic,
                 std::make_shared<GraphicOracle>(vertices, std::move(edges)));
}

std::optional<std::string> find_rank_axiom_violation(
    int n, const std::vector<int>& table) {
  if (table.size() != (std::size_t{1} << n)) {
    return "rank table must have 2^n entries";
  }
  if (table[0] != 0) return "rank of the empty set is not 0";
  const std::uint64_t size = table.size();
  for (std::uint64_t x = 0; x < size; ++x) {
    for (int e = 0; e < n; ++e) {
      const std::uint64_t bit = std::uint64_t{1} << e;
      if (x & bit) continue;
      const int step = table[x | bit] - table[x];
      if (step < 0 || step > 1) {
        return "unit increase/monotonicity fails at " +
               ElementSet(x).to_string() + " + " + std::to_string(e);
      }
      for (int f = e + 1; f < n; ++f) {
        const std::uint64_t bit2 = std::uint64_t{1} << f;
        if (x & bit2) continue;
        if (table[x | bit] + table[x | bit2] <
            table[x | bit | bit2] + table[x]) {
          return "submodularity fails at " + ElementSet(x).to_string() +
                 " with " + std::to_string(e) + "," + std::to_string(f);
        }
      }
    }
  }
  return std::nullopt;
}

Matroid explicit_matroid_from_ranks(int n, std::vector<int> table) {
  GroundSet ground(n);
  require_table_size(n);
  if (table.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("rank table must have 2^n entries");
  }
  if (n <= kAxiomCheckCap) {
    if (auto violation = find_rank_axiom_violation(n, table)) {
      throw std::invalid_argument("rank table violates matroid axioms: " +
                                  *violation);
    }
  } else {
    std::cerr << "warning: rank axioms not checked for n=" << n << " > "
              << kAxiomCheckCap << "\n";
  }
  return Matroid(std::move(ground), MatroidKind::kExplicit,
                 std::make_shared<TableOracle>(std::move(table)));
}

Matroid explicit_matroid_from_independent_sets(
    int n, const std::vector<ElementSet>& independent_sets) {
  require_table_size(n);
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<char> independent(size, 0);
  independent[0] = 1;
  for (ElementSet s : independent_sets) {
    check_in_ground(s, n, "independent set");
    independent[s.bits()] = 1;
  }
  // Downward closure, largest masks first so every subset is reached.
  for (std::uint64_t x = size; x-- > 0;) {
    if (!independent[x]) continue;
    for (std::uint64_t rest = x; rest != 0; rest &= rest - 1) {
      independent[x & ~(rest & (~rest + 1))] = 1;
    }
  }
  std::vector<int> table(size, 0);
  for (std::uint64_t x = 1; x < size; ++x) {
    if (independent[x]) {
      table[x] = std::popcount(x);
      continue;
    }
    int best = 0;
    for (std::uint64_t rest = x; rest != 0; rest &= rest - 1) {
      best = std::max(best, table[x & ~(rest & (~rest + 1))]);
    }
    table[x] = best;
  }
  return explicit_matroid_from_ranks(n, std::move(table));
}

Matroid dual(const Matroid& m) {
  return Matroid(m.ground(), MatroidKind::kDual,
                 std::make_shared<DualOracle>(m));
}

Matroid restrict(const Matroid& m, ElementSet subset) {
  if (!subset.subset_of(m.all())) {
    throw std::out_of_range("restriction set leaves the ground set");
  }
  if (subset.empty()) {
    throw std::invalid_argument("cannot restrict to the empty set");
  }
  std::vector<std::string> labels;
  labels.reserve(subset.size());
  for (int e : subset.elements()) labels.push_back(m.ground().label(e));
  return Matroid(GroundSet(subset.size(), std::move(labels)),
                 MatroidKind::kRestriction,
                 std::make_shared<RestrictionOracle>(m, subset));
}

std::vector<int> rank_table(const Matroid& m) {
  require_table_size(m.size());
  const std::uint64_t size = std::uint64_t{1} << m.size();
  std::vector<int> table(size);
  for (std::uint64_t x = 0; x < size; ++x) table[x] = m.rank(ElementSet(x));
  return table;
}

}  // namespace unipart
