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

#include "unipart/matroid_json.hpp"

#include <fstream>
#include <stdexcept>

#include "unipart/errors.hpp"

namespace unipart {

namespace {

using nlohmann::json;

const json& field(const json& record, const char* name) {
  auto it = record.find(name);
  if (it == record.end()) {
    throw ParseError(std::string("missing field \"") + name + "\"");
  }
  return *it;
}

int int_field(const json& record, const char* name) {
  const json& v = field(record, name);
  if (!v.is_number_integer()) {
    throw ParseError(std::string("field \"") + name + "\" must be an integer");
  }
  return v.get<int>();
}

std::vector<int> int_list(const json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const json& x : v) {
    if (!x.is_number_integer()) {
      throw ParseError(std::string(what) + " must contain integers");
    }
    out.push_back(x.get<int>());
  }
  return out;
}

ElementSet element_set(const json& v, int n, const char* what) {
  const std::vector<int> list = int_list(v, what);
  for (int e : list) {
    if (e < 0 || e >= n) {
      throw ParseError(std::string(what) + " has element " + std::to_string(e) +
                       " outside [0, " + std::to_string(n) + ")");
    }
  }
  try {
    return ElementSet::from_elements(list);
  } catch (const std::exception& err) {
    throw ParseError(std::string(what) + ": " + err.what());
  }
}

std::vector<ElementSet> set_list(const json& v, int n, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<ElementSet> out;
  for (const json& s : v) out.push_back(element_set(s, n, what));
  return out;
}

Matroid build(const json& record) {
  if (!record.is_object()) throw ParseError("matroid record must be an object");
  const json& type_field = field(record, "type");
  if (!type_field.is_string()) throw ParseError("\"type\" must be a string");
  const std::string type = type_field.get<std::string>();
  const int n = int_field(record, "n");
  if (n < 1 || n > kMaxElements) {
    throw ParseError("\"n\" must be in [1, 64]");
  }

  if (type == "uniform") {
    const int r = int_field(record, "r");
    if (r < 0) throw ParseError("capacity < 0: uniform rank r");
    return uniform_matroid(n, r);
  }
  if (type == "partition" || type == "laminar") {
    const auto sets =
        set_list(field(record, type == "partition" ? "blocks" : "sets"), n,
                 "set family");
    const auto caps = int_list(field(record, "caps"), "caps");
    if (caps.size() != sets.size()) {
      throw ParseError("\"caps\" must have one entry per set");
    }
    for (int c : caps) {
      if (c < 0) throw ParseError("capacity < 0");
    }
    if (type == "partition") return partition_matroid(n, sets, caps);
    std::vector<LaminarConstraint> members;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      members.push_back({sets[i], caps[i]});
    }
    return laminar_matroid(n, std::move(members));
  }
  if (type == "graphic") {
    const int vertices = int_field(record, "vertices");
    const json& edges = field(record, "edges");
    if (!edges.is_array()) throw ParseError("\"edges\" must be an array");
    std::vector<std::pair<int, int>> pairs;
    for (const json& e : edges) {
      const auto ends = int_list(e, "edge");
      if (ends.size() != 2) throw ParseError("each edge must be a pair");
      pairs.emplace_back(ends[0], ends[1]);
    }
    if (static_cast<int>(pairs.size()) != n) {
      throw ParseError("graphic matroid: \"n\" must equal the number of edges");
    }
    return graphic_matroid(vertices, std::move(pairs));
  }
  if (type == "explicit") {
    if (record.contains("rank_table")) {
      auto table = int_list(record.at("rank_table"), "rank_table");
      return explicit_matroid_from_ranks(n, std::move(table));
    }
    if (record.contains("independent_sets")) {
      return explicit_matroid_from_independent_sets(
          n, set_list(record.at("independent_sets"), n, "independent_sets"));
    }
    throw ParseError(
        "explicit matroid needs \"rank_table\" or \"independent_sets\"");
  }
  throw ParseError("unknown matroid type \"" + type + "\"");
}

Matroid with_labels(const Matroid& m, const json& record) {
  const json& list = record.at("labels");
  if (!list.is_array()) throw ParseError("\"labels\" must be an array");
  std::vector<std::string> labels;
  for (const json& l : list) {
    if (!l.is_string()) throw ParseError("labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  return m.relabeled(std::move(labels));
}

}  // namespace

Matroid parse_matroid(const nlohmann::json& record) {
  try {
    Matroid m = build(record);
    return record.contains("labels") ? with_labels(m, record) : m;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& err) {
    throw ParseError(err.what());
  }
}

Instance parse_instance(const nlohmann::json& document) {
  if (!document.is_object()) throw ParseError("instance must be a JSON object");
  Instance out;
  if (document.contains("matroids")) {
    const json& list = document.at("matroids");
    if (!list.is_array() || list.empty() || list.size() > 2) {
      throw ParseError("\"matroids\" must be an array of one or two records");
    }
    for (const json& record : list) out.matroids.push_back(parse_matroid(record));
    if (out.matroids.size() == 2 &&
        out.matroids[0].size() != out.matroids[1].size()) {
      throw ParseError("both matroids must share one ground set");
    }
  } else {
    out.matroids.push_back(parse_matroid(document));
  }
  if (document.contains("k")) {
    const json& k = document.at("k");
    if (!k.is_number_integer() || k.get<int>() < 1) {
      throw ParseError("\"k\" must be a positive integer");
    }
    out.k = k.get<int>();
  }
  return out;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json document;
  try {
    in >> document;
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(path + ": " + err.what());
  }
  return parse_instance(document);
}

}  // namespace unipart
