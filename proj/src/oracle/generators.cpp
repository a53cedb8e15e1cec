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

#include "unipart/oracle/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace unipart::oracle {
namespace {

void require_size(int n) {
  if (n < 1 || n > kMaxElements) {
    throw std::invalid_argument("generator size must lie in [1, 64]");
  }
}

bool coin(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

void split_laminar(Rng& rng, const std::vector<int>& members,
                   std::vector<LaminarConstraint>& out) {
  const int size = static_cast<int>(members.size());
  if (coin(rng, 0.7)) {
    out.push_back({ElementSet::from_elements(members),
                   uniform_int(rng, 1, size)});
  }
  if (size < 2 || !coin(rng, 0.75)) return;
  const int parts = uniform_int(rng, 2, std::min(3, size));
  std::vector<std::vector<int>> groups(parts);
  for (int e : members) groups[uniform_int(rng, 0, parts - 1)].push_back(e);
  for (const auto& g : groups) {
    if (!g.empty() && g.size() < members.size()) split_laminar(rng, g, out);
  }
}

Matroid random_base_kind(Rng& rng, int n) {
  switch (uniform_int(rng, 0, 3)) {
    case 0:
      return random_uniform(rng, n);
    case 1:
      return random_partition(rng, n);
    case 2:
      return random_laminar(rng, n);
    default:
      return random_graphic(rng, n);
  }
}

}  // namespace

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Matroid random_uniform(Rng& rng, int n) {
  require_size(n);
  return uniform_matroid(n, uniform_int(rng, 1, n));
}

Matroid random_partition(Rng& rng, int n) {
  require_size(n);
  const int count = uniform_int(rng, 1, n);
  std::vector<std::vector<int>> groups(count);
  for (int e = 0; e < n; ++e) {
    if (coin(rng, 0.15)) continue;  // Unconstrained element.
    groups[uniform_int(rng, 0, count - 1)].push_back(e);
  }
  std::vector<ElementSet> blocks;
  std::vector<int> caps;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    blocks.push_back(ElementSet::from_elements(g));
    caps.push_back(uniform_int(rng, 1, static_cast<int>(g.size())));
  }
  return partition_matroid(n, std::move(blocks), std::move(caps));
}

Matroid random_laminar(Rng& rng, int n) {
  require_size(n);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<LaminarConstraint> family;
  split_laminar(rng, all, family);
  return laminar_matroid(n, std::move(family));
}

Matroid random_graphic(Rng& rng, int n) {
  require_size(n);
  const int vertices = uniform_int(rng, 2, std::max(2, n));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    const int u = uniform_int(rng, 0, vertices - 1);
    int v = uniform_int(rng, 0, vertices - 2);
    if (v >= u) ++v;
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return graphic_matroid(vertices, std::move(edges));
}

Matroid random_dual(Rng& rng, int n) {
  require_size(n);
  return dual(random_base_kind(rng, n));
}

Matroid random_restriction(Rng& rng, int n) {
  require_size(n);
  if (n > kMaxElements - 3) {
    throw std::invalid_argument("restriction generator needs n <= 61");
  }
  const int extra = uniform_int(rng, 1, 3);
  const Matroid parent = random_base_kind(rng, n + extra);
  std::vector<int> order(n + extra);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  order.resize(n);
  return restrict(parent, ElementSet::from_elements(order));
}

Matroid random_matroid(Rng& rng, int n, bool allow_loops) {
  require_size(n);
  while (true) {
    Matroid m = [&] {
      switch (uniform_int(rng, 0, 5)) {
        case 4:
          return random_dual(rng, n);
        case 5:
          return random_restriction(rng, n);
        default:
          return random_base_kind(rng, n);
      }
    }();
    if (allow_loops || m.loops().empty()) return m;
  }
}

}  // namespace unipart::oracle
