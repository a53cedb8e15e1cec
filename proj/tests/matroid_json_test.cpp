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

#include "doctest.h"
#include "json.hpp"
#include "unipart/errors.hpp"
#include "unipart/matroid_json.hpp"

using namespace unipart;
using nlohmann::json;

TEST_CASE("uniform, partition and laminar records") {
  const Matroid u = parse_matroid(json::parse(R"({"type":"uniform","n":4,"r":2})"));
  CHECK(u.kind() == MatroidKind::kUniform);
  CHECK(u.rank(ElementSet{0, 1, 2}) == 2);

  const Matroid p = parse_matroid(json::parse(
      R"({"type":"partition","n":4,"blocks":[[0,1],[2,3]],"caps":[1,1]})"));
  CHECK(p.is_independent(ElementSet{0, 3}));
  CHECK_FALSE(p.is_independent(ElementSet{0, 1}));

  const Matroid l = parse_matroid(json::parse(
      R"({"type":"laminar","n":4,"sets":[[0,1,2,3],[0,1]],"caps":[3,1]})"));
  CHECK(l.rank(ElementSet{0, 1}) == 1);
  CHECK(l.full_rank() == 3);
}

TEST_CASE("graphic and explicit records") {
  const Matroid g = parse_matroid(json::parse(
      R"({"type":"graphic","n":3,"vertices":3,"edges":[[0,1],[1,2],[0,2]]})"));
  CHECK(g.full_rank() == 2);
  const Matroid e = parse_matroid(
      json::parse(R"({"type":"explicit","n":2,"rank_table":[0,1,1,1]})"));
  CHECK(e.full_rank() == 1);
  const Matroid i = parse_matroid(json::parse(
      R"({"type":"explicit","n":3,"independent_sets":[[0,1],[1,2]]})"));
  CHECK(i.rank(ElementSet{0, 2}) == 1);
}

TEST_CASE("schema violations raise ParseError") {
  const char* bad[] = {
      R"({"type":"uniform","n":4})",
      R"({"type":"uniform","n":0,"r":1})",
      R"({"type":"uniform","n":4,"r":-1})",
      R"({"type":"mystery","n":2})",
      R"({"type":"partition","n":4,"blocks":[[0,1]],"caps":[1,1]})",
      R"({"type":"partition","n":4,"blocks":[[0,5]],"caps":[1]})",
      R"({"type":"laminar","n":4,"sets":[[0,1],[1,2]],"caps":[1,1]})",
      R"({"type":"laminar","n":4,"sets":[[0,1]],"caps":[-2]})",
      R"({"type":"graphic","n":2,"vertices":3,"edges":[[0,1]]})",
      R"({"type":"explicit","n":2,"rank_table":[0,0,0,2]})",
      R"({"type":"explicit","n":2})",
      R"({"type":"uniform","n":2,"r":1,"labels":["a","a"]})",
      R"([1,2,3])",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_matroid(json::parse(text)), ParseError);
  }
}

TEST_CASE("instances") {
  const Instance two = parse_instance(json::parse(R"({
    "matroids":[{"type":"uniform","n":3,"r":1},{"type":"uniform","n":3,"r":2}],
    "k":2})"));
  CHECK(two.matroids.size() == 2);
  CHECK(two.k == 2);
  const Instance bare =
      parse_instance(json::parse(R"({"type":"uniform","n":3,"r":1})"));
  CHECK(bare.matroids.size() == 1);
  CHECK_FALSE(bare.k.has_value());
  CHECK_THROWS_AS(parse_instance(json::parse(R"({
    "matroids":[{"type":"uniform","n":3,"r":1},{"type":"uniform","n":4,"r":2}]})")),
                  ParseError);
  CHECK_THROWS_AS(parse_instance(json::parse(R"({"matroids":[]})")), ParseError);
  CHECK_THROWS_AS(
      parse_instance(json::parse(R"({"type":"uniform","n":3,"r":1,"k":0})")),
      ParseError);
  CHECK_THROWS_AS(load_instance(UNIPART_TEST_DATA "/missing.json"), ParseError);
  CHECK_THROWS_AS(load_instance(UNIPART_TEST_DATA "/malformed.json"), ParseError);
  const Instance file = load_instance(UNIPART_TEST_DATA "/laminar_pair.json");
  CHECK(file.matroids[0].ground().label(0) == "a");
}
