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

#include "unipart/union_matroid.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "unipart/errors.hpp"

namespace unipart {

ElementSet Coloring::covered() const {
  ElementSet out;
  for (ElementSet b : blocks) out = out | b;
  return out;
}

namespace {

constexpr int kNone = -1;

void check_copies(int k) {
  if (k < 0) throw std::invalid_argument("number of copies must be >= 0");
}

// Matroid partition state: k disjoint independent blocks and the block
// holding each element.
class PartitionSearch {
 public:
  PartitionSearch(const Matroid& m, int k)
      : m_(m), blocks_(k), owner_(m.size(), kNone) {}

  // Tries to insert x along a shortest augmenting path. Returns false, with
  // visited_ holding the elements reachable from x, when no path exists.
  bool insert(int x) {
    const int n = m_.size();
    std::vector<int> pred(n, kNone);
    std::vector<int> via(n, kNone);
    visited_ = ElementSet::singleton(x);
    std::deque<int> queue{x};
    while (!queue.empty()) {
      const int y = queue.front();
      queue.pop_front();
      for (int j = 0; j < static_cast<int>(blocks_.size()); ++j) {
        if (owner_[y] == j) continue;
        if (m_.is_independent(blocks_[j].with(y))) {
          apply_path(y, j, pred, via);
          return true;
        }
        for (int z : (blocks_[j] - visited_).elements()) {
          if (m_.is_independent((blocks_[j] - ElementSet::singleton(z)).with(y))) {
            visited_.insert(z);
            pred[z] = y;
            via[z] = j;
            queue.push_back(z);
          }
        }
      }
    }
    return false;
  }

  // Elements reachable from any element of `sources` in the exchange graph.
  ElementSet reachable(ElementSet sources) const {
    ElementSet seen = sources;
    std::deque<int> queue;
    for (int s : sources.elements()) queue.push_back(s);
    while (!queue.empty()) {
      const int y = queue.front();
      queue.pop_front();
      for (int j = 0; j < static_cast<int>(blocks_.size()); ++j) {
        if (owner_[y] == j) continue;
        for (int z : (blocks_[j] - seen).elements()) {
          if (m_.is_independent((blocks_[j] - ElementSet::singleton(z)).with(y))) {
            seen.insert(z);
            queue.push_back(z);
          }
        }
      }
    }
    return seen;
  }

  const std::vector<ElementSet>& blocks() const { return blocks_; }

 private:
  // y enters block j; walking back, each predecessor enters the block its
  // successor vacates.
  void apply_path(int y, int j, const std::vector<int>& pred,
                  const std::vector<int>& via) {
    int element = y;
    int target = j;
    while (element != kNone) {
      if (owner_[element] != kNone) {
        blocks_[owner_[element]].erase(element);
      }
      blocks_[target].insert(element);
      const int previous_block = owner_[element];
      owner_[element] = target;
      const int prev = pred[element];
      target = previous_block;
      if (prev != kNone && via[element] != previous_block) {
        throw std::logic_error("augmenting path bookkeeping broken");
      }
      element = prev;
    }
  }

  const Matroid& m_;
  std::vector<ElementSet> blocks_;
  std::vector<int> owner_;
  ElementSet visited_;
};

int exhaustive_union_rank(const Matroid& m, int k, ElementSet x) {
  const int width = x.size();
  const std::uint64_t count = std::uint64_t{1} << width;
  std::vector<int> h(count);
  for (std::uint64_t local = 0; local < count; ++local) {
    const ElementSet y = deposit(ElementSet(local), x);
    int best = k * m.rank(y);
    for (std::uint64_t rest = local; rest != 0; rest &= rest - 1) {
      best = std::min(best, 1 + h[local & ~(rest & (~rest + 1))]);
    }
    h[local] = best;
  }
  return h[count - 1];
}

}  // namespace

UnionDecomposition max_union_coloring(const Matroid& m, int k, ElementSet x) {
  check_copies(k);
  if (!x.subset_of(m.all())) {
    throw std::out_of_range("set " + x.to_string() + " leaves the ground set");
  }
  PartitionSearch search(m, k);
  ElementSet uncovered;
  for (int e : x.elements()) {
    if (k == 0 || !search.insert(e)) uncovered.insert(e);
  }
  UnionDecomposition out;
  out.coloring.blocks = search.blocks();
  out.uncovered = uncovered;
  out.certificate = k == 0 ? x : search.reachable(uncovered);
  return out;
}

int union_rank(const Matroid& m, int k, ElementSet x, int exhaustive_cap) {
  check_copies(k);
  if (!x.subset_of(m.all())) {
    throw std::out_of_range("set " + x.to_string() + " leaves the ground set");
  }
  if (k == 0) return 0;
  if (x.size() <= exhaustive_cap) return exhaustive_union_rank(m, k, x);
  return (x - max_union_coloring(m, k, x).uncovered).size();
}

bool is_in_union(const Matroid& m, int k, ElementSet x) {
  check_copies(k);
  if (k == 0) return x.empty();
  return max_union_coloring(m, k, x).uncovered.empty();
}

Coloring color_into_independent(const Matroid& m, int k, ElementSet x) {
  UnionDecomposition d = max_union_coloring(m, k, x);
  if (!d.uncovered.empty()) {
    throw InfeasibleError(
        "E ∉ I^k: " + x.to_string() + " is not a union of " +
            std::to_string(k) + " independent sets (certificate Y=" +
            d.certificate.to_string() + ")",
        d.certificate);
  }
  return std::move(d.coloring);
}

int covering_index(const Matroid& m) {
  const ElementSet loops = m.loops();
  if (!loops.empty()) {
    throw PreconditionError("matroid has loops " + loops.to_string() +
                            "; no finite covering index");
  }
  for (int mu = 1; mu <= m.size(); ++mu) {
    if (is_in_union(m, mu, m.all())) return mu;
  }
  throw std::logic_error("loop-free matroid not covered by |E| copies");
}

UnionRankTable::UnionRankTable(const Matroid& m, int k)
    : UnionRankTable(rank_table(m), m.size(), k) {}

UnionRankTable::UnionRankTable(const std::vector<int>& ranks, int n, int k)
    : n_(n), k_(k), table_(ranks.size()) {
  check_copies(k);
  if (ranks.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("rank table must have 2^n entries");
  }
  for (std::uint64_t x = 0; x < table_.size(); ++x) {
    int best = k * ranks[x];
    for (std::uint64_t rest = x; rest != 0; rest &= rest - 1) {
      best = std::min(best, 1 + table_[x & ~(rest & (~rest + 1))]);
    }
    table_[x] = best;
  }
}

}  // namespace unipart
