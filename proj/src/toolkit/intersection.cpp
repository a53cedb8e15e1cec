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

#include "unipart/intersection.hpp"

#include <deque>
#include <vector>

namespace unipart {

ElementSet max_common_independent(ElementSet ground, const RankFunction& rank_a,
                                  const RankFunction& rank_b) {
  auto indep_a = [&](ElementSet s) { return rank_a(s) == s.size(); };
  auto indep_b = [&](ElementSet s) { return rank_b(s) == s.size(); };
  const int width = ground.span_width();
  ElementSet current;
  while (true) {
    const ElementSet outside = ground - current;
    ElementSet sources, sinks;
    for (int x : outside.elements()) {
      if (indep_a(current.with(x))) sources.insert(x);
      if (indep_b(current.with(x))) sinks.insert(x);
    }
    if (!(sources & sinks).empty()) {
      current.insert((sources & sinks).elements().front());
      continue;
    }
    // Arcs: y -> x when current - y + x ∈ I_a, x -> y when current - y + x ∈ I_b
    // (y ∈ current, x ∉ current). Shortest source-to-sink path.
    std::vector<int> pred(width, -1);
    ElementSet seen = sources;
    std::deque<int> queue;
    for (int s : sources.elements()) queue.push_back(s);
    int end = -1;
    while (!queue.empty() && end < 0) {
      const int v = queue.front();
      queue.pop_front();
      if (current.contains(v)) {
        for (int x : (outside - seen).elements()) {
          if (indep_a(current.without(v).with(x))) {
            seen.insert(x);
            pred[x] = v;
            if (sinks.contains(x)) {
              end = x;
              break;
            }
            queue.push_back(x);
          }
        }
      } else {
        for (int y : (current - seen).elements()) {
          if (indep_b(current.without(y).with(v))) {
            seen.insert(y);
            pred[y] = v;
            queue.push_back(y);
          }
        }
      }
    }
    if (end < 0) return current;
    for (int v = end; v >= 0; v = pred[v]) {
      if (current.contains(v)) {
        current.erase(v);
      } else {
        current.insert(v);
      }
    }
  }
}

}  // namespace unipart
