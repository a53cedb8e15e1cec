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

#include "unipart/partition_single.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "unipart/errors.hpp"
#include "unipart/intersection.hpp"
#include "unipart/union_matroid.hpp"

namespace unipart {

bool in_removal_family(const Matroid& m, int k, ElementSet x) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return m.is_independent(x) && is_in_union(m, k - 1, m.all() - x);
}

namespace {

// Decides whether some removal-family member X with In ⊆ X ⊆ E∖Out has
// lo ≤ |X| ≤ hi, for a remainder that must lie in I^copies (copies ≥ 1).
class RemovalFeasibility {
 public:
  RemovalFeasibility(const Matroid& m, int copies, int lo, int hi)
      : m_(m), copies_(copies), lo_(lo), hi_(hi) {
    if (m.size() <= kUnionRankExhaustiveCap) table_.emplace(m, copies);
  }

  bool operator()(ElementSet in, ElementSet out) const {
    if (!m_.is_independent(in)) return false;
    if (union_rank_of(out) != out.size()) return false;
    const ElementSet rest = m_.all() - in - out;
    const int rank_in = m_.rank(in);
    const RankFunction rank_a = [&](ElementSet s) {
      return m_.rank(s | in) - rank_in;
    };
    auto rank_b = [&](ElementSet s) {
      return union_rank_of(s | out) - out.size();
    };
    const int rank_b_rest = rank_b(rest);
    const RankFunction rank_b_dual = [&](ElementSet s) {
      return s.size() - rank_b_rest + rank_b(rest - s);
    };
    const int dual_rank = rest.size() - rank_b_rest;
    const ElementSet common = max_common_independent(rest, rank_a, rank_b_dual);
    if (common.size() < dual_rank) return false;
    const int smallest = in.size() + dual_rank;
    const int largest = in.size() + rank_a(rest);
    return std::max(smallest, lo_) <= std::min(largest, hi_);
  }

 private:
  int union_rank_of(ElementSet s) const {
    return table_ ? (*table_)(s) : union_rank(m_, copies_, s);
  }

  const Matroid& m_;
  int copies_;
  int lo_;
  int hi_;
  std::optional<UnionRankTable> table_;
};

}  // namespace

ElementSet find_removable(const Matroid& m, int k, int lo, int hi) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (lo > hi) throw std::invalid_argument("window with lo > hi");
  // Throws with a rank certificate when E ∉ I^k.
  color_into_independent(m, k, m.all());

  const ElementSet all = m.all();
  if (k == 1) {
    if (lo <= all.size() && all.size() <= hi) return all;
    throw InfeasibleError("no removal-family member with size in [" +
                          std::to_string(lo) + "," + std::to_string(hi) + "]");
  }

  const RemovalFeasibility feasible(m, k - 1, lo, hi);
  if (!feasible(ElementSet(), ElementSet())) {
    throw InfeasibleError("no removal-family member with size in [" +
                          std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
  ElementSet in, out;
  for (int e = 0; e < m.size(); ++e) {
    if (feasible(in.with(e), out)) {
      in.insert(e);
    } else {
      out.insert(e);
    }
  }
  if (!in_removal_family(m, k, in) || in.size() < lo || in.size() > hi) {
    throw std::logic_error("coordinate fixing produced an invalid set " +
                           in.to_string());
  }
  return in;
}

Partition partition_nearly_uniform(const Matroid& m, int k,
                                   std::optional<Window> window) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const ElementSet loops = m.loops();
  if (!loops.empty()) {
    const int loop = loops.elements().front();
    throw InfeasibleError("E ∉ I^k: element " + std::to_string(loop) +
                              " is a loop",
                          ElementSet::singleton(loop));
  }
  color_into_independent(m, k, m.all());

  const int n = m.size();
  const Window w = window.value_or(auto_window(n, k));
  if (w.lo > w.hi) throw std::invalid_argument("window with lo > hi");

  Partition out;
  ElementSet residual = m.all();
  for (int ell = 0; ell < k; ++ell) {
    const Window step = step_window(w, residual.size(), k - ell);
    if (step.lo > step.hi) {
      if (!window) {
        throw std::logic_error("running window became empty at step " +
                               std::to_string(ell));
      }
      throw InfeasibleError(std::to_string(residual.size()) +
                            " elements cannot fill " + std::to_string(k - ell) +
                            " blocks with sizes in [" + std::to_string(w.lo) +
                            "," + std::to_string(w.hi) + "]");
    }
    ElementSet block;
    if (!residual.empty()) {
      const Matroid local = restrict(m, residual);
      block = deposit(find_removable(local, k - ell, step.lo, step.hi),
                      residual);
    }
    out.blocks.push_back(block);
    residual = residual - block;
  }
  if (!residual.empty()) {
    throw std::logic_error("iterated removal left elements uncovered");
  }
  return out;
}

}  // namespace unipart
