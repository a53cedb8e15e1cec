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

#include "unipart/partition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace unipart {

std::vector<int> Partition::sizes() const {
  std::vector<int> out;
  out.reserve(blocks.size());
  for (ElementSet b : blocks) out.push_back(b.size());
  return out;
}

ElementSet Partition::covered() const {
  ElementSet out;
  for (ElementSet b : blocks) out = out | b;
  return out;
}

bool Partition::pairwise_disjoint() const {
  ElementSet seen;
  for (ElementSet b : blocks) {
    if (!(seen & b).empty()) return false;
    seen = seen | b;
  }
  return true;
}

int Partition::spread() const {
  if (blocks.empty()) return 0;
  const auto s = sizes();
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  return *hi - *lo;
}

Window auto_window(int n, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  return Window{n / k, (n + k - 1) / k};
}

Partition Partition::canonical() const {
  Partition out = *this;
  std::stable_sort(out.blocks.begin(), out.blocks.end(),
                   [](ElementSet a, ElementSet b) {
                     if (a.empty() || b.empty()) return b.empty() && !a.empty();
                     return std::countr_zero(a.bits()) <
                            std::countr_zero(b.bits());
                   });
  return out;
}

Window step_window(const Window& w, int residual, int copies) {
  if (copies < 1) throw std::invalid_argument("copies must be >= 1");
  const int rest = copies - 1;
  return Window{std::max(w.lo, residual - rest * w.hi),
                std::min(w.hi, residual - rest * w.lo)};
}

}  // namespace unipart
