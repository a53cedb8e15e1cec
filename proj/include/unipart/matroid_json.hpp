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

#include "json.hpp"
#include "unipart/matroid.hpp"

namespace unipart {

/// Builds a matroid from one JSON record:
///   {"type":"uniform","n":4,"r":2}
///   {"type":"partition","n":4,"blocks":[[0,1],[2,3]],"caps":[1,1]}
///   {"type":"laminar","n":4,"sets":[[0,1,2,3],[0,1]],"caps":[3,1]}
///   {"type":"graphic","n":6,"vertices":4,"edges":[[0,1],...]}
///   {"type":"explicit","n":2,"rank_table":[0,1,1,1]}
///   {"type":"explicit","n":2,"independent_sets":[[0],[1]]}
/// An optional "labels" array names the elements. Throws ParseError.
Matroid parse_matroid(const nlohmann::json& record);

/// A parsed problem: one matroid (single mode) or two (common mode) plus an
/// optional number of blocks k.
struct Instance {
  std::vector<Matroid> matroids;
  std::optional<int> k;
};

/// Accepts {"matroids":[...], "k":K} or a bare matroid record.
Instance parse_instance(const nlohmann::json& document);

/// Reads and parses a file. Throws ParseError on I/O, JSON, or schema errors.
Instance load_instance(const std::string& path);

}  // namespace unipart
