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

#include <string>
#include <utility>
#include <vector>

#include "unipart/matroid.hpp"

// Small named matroids shared by the self-test, unit tests and the
// acceptance suite.
namespace unipart::fixtures {

/// Uniform matroid of rank 2 on {0,1,2,3}.
inline Matroid u24() { return uniform_matroid(4, 2); }
/// Uniform matroid of rank 1 on {0,1,2}.
inline Matroid u13() { return uniform_matroid(3, 1); }
/// Blocks {0,1} and {2,3}, capacity 1 each.
inline Matroid p2() {
  return partition_matroid(4, {ElementSet{0, 1}, ElementSet{2, 3}}, {1, 1});
}
/// Blocks {0,2} and {1,3}, capacity 1 each.
inline Matroid q2() {
  return partition_matroid(4, {ElementSet{0, 2}, ElementSet{1, 3}}, {1, 1});
}
/// Cycle matroid of the complete graph on 4 vertices; edge order
/// 01, 02, 03, 12, 13, 23.
inline Matroid k4() {
  return graphic_matroid(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline std::vector<std::pair<std::string, Matroid>> all() {
  return {{"U24", u24()}, {"U13", u13()}, {"P2", p2()}, {"Q2", q2()},
          {"K4", k4()}};
}

}  // namespace unipart::fixtures
