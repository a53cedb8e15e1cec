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

namespace unipart {

/// Ordered list of pairwise-disjoint blocks. Used for both partitions and
/// subpartitions; blocks may be empty.
struct Partition {
  std::vector<ElementSet> blocks;

  std::vector<int> sizes() const;
  ElementSet covered() const;
  bool pairwise_disjoint() const;
  /// max block size − min block size; 0 for no blocks.
  int spread() const;
  /// Same blocks ordered by smallest element, empty blocks last.
  Partition canonical() const;
};

/// Closed cardinality window [lo, hi] for every block.
struct Window {
  int lo = 0;
  int hi = 0;

  bool contains(int size) const { return lo <= size && size <= hi; }
  friend bool operator==(Window, Window) = default;
};

/// [⌊n/k⌋, ⌈n/k⌉].
Window auto_window(int n, int k);

/// Sizes a block may take when `residual` elements remain for `copies`
/// blocks, so that the rest can still be split into copies − 1 blocks inside
/// `w`: [max(lo, r − (c−1)·hi), min(hi, r − (c−1)·lo)]. Empty (lo > hi) when
/// r/c lies outside `w`.
Window step_window(const Window& w, int residual, int copies);

}  // namespace unipart
