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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the CLI with `args`; stderr is folded into the output when requested.
Result run(const std::string& args, bool with_stderr = false) {
  const std::string command = std::string(UNIPART_CLI_PATH) + " " + args +
                              (with_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Result r;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    r.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string(UNIPART_TEST_DATA) + "/" + name;
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("rank queries print decimal integers") {
  CHECK(run("covering-index " + data("m_u13.json")).out == "3\n");
  CHECK(run("rank " + data("m_u24.json") + " --set 0,1,2").out == "2\n");
  CHECK(run("union-rank " + data("m_k4.json") + " -k 2 --set all").out == "6\n");
  CHECK(run("rank " + data("laminar_pair.json") + " --set a,b --matroid 1").out ==
        "1\n");
  CHECK(run("rank " + data("m_u24.json") + " --set 7").code == 2);
}

TEST_CASE("partition command") {
  const Result pq = run("partition " + data("two_partition_matroids.json") +
                        " -k 2 --common --verify");
  REQUIRE(pq.code == 0);
  const auto doc = parse(pq);
  CHECK(doc["blocks"] == nlohmann::json::parse("[[0,3],[1,2]]"));
  CHECK(doc["sizes"] == nlohmann::json::parse("[2,2]"));
  CHECK(doc["verified"] == true);
  CHECK(doc["strategy"] == "polyhedral");
  CHECK(doc["report"]["passed"] == true);

  const Result exhaustive = run("partition " + data("two_partition_matroids.json") +
                                " --common --strategy exhaustive");
  REQUIRE(exhaustive.code == 0);
  CHECK(parse(exhaustive)["verified"] == false);

  const Result singles = run("partition " + data("m_u13.json") + " -k 3");
  REQUIRE(singles.code == 0);
  CHECK(parse(singles)["blocks"] == nlohmann::json::parse("[[0],[1],[2]]"));

  const Result infeasible = run("partition " + data("m_u13.json") + " -k 2", true);
  CHECK(infeasible.code == 3);
  CHECK(infeasible.out.find("E ∉ I^k") != std::string::npos);

  CHECK(run("partition " + data("m_u13.json") + " -k 3 --strategy polyhedral")
            .code == 2);
  CHECK(run("partition " + data("m_u13.json") + " -k 3 --common").code == 2);
  CHECK(run("partition " + data("m_u24.json") + " -k 2 --window 3,1").code == 2);
  CHECK(run("partition " + data("m_u24.json") + " -k 2 --window 1,3 --verify")
            .code == 0);
}

TEST_CASE("a missing integral point is a step failure") {
  const std::string file = data("k4_matchings.json");
  const Result r = run("partition " + file + " --common");
  CHECK(r.code == 4);
  const auto doc = parse(r);
  CHECK(doc["error"] == "step_failure");
  CHECK(doc["ell"] == 0);
  CHECK(doc["window"] == nlohmann::json::parse("[3,3]"));
  CHECK(run("partition " + file + " --common --strategy exhaustive").code == 3);

  const Result probe = run("probe " + file);
  REQUIRE(probe.code == 0);
  const auto steps = parse(probe)["steps"];
  CHECK(parse(probe)["completed"] == false);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0]["uniform_member"] == true);
  CHECK(steps[0]["integral_point"].is_null());
}

TEST_CASE("subpartition command") {
  const Result four = run("subpartition " + data("u24_pair.json") + " -k 4");
  REQUIRE(four.code == 0);
  const auto doc = parse(four);
  CHECK(doc["sizes"] == nlohmann::json::parse("[1]"));
  CHECK(doc["remainder"].size() == 3);
  CHECK(doc["mu2"] == 2);
  CHECK(doc["verified"] == true);

  const Result three = run("subpartition " + data("u24_pair.json") + " -k 3");
  REQUIRE(three.code == 0);
  CHECK(parse(three)["blocks"].empty());
  CHECK(parse(three)["remainder"] == nlohmann::json::parse("[0,1,2,3]"));

  CHECK(run("subpartition " + data("u24_pair.json") + " -k 2").code == 3);
  CHECK(run("subpartition " + data("m_u24.json") + " -k 4").code == 2);
}

TEST_CASE("probe command and log") {
  const std::filesystem::path log =
      std::filesystem::temp_directory_path() / "unipart_cli_probe_test.jsonl";
  std::filesystem::remove(log);
  const std::string args = "probe " + data("two_partition_matroids.json") +
                           " -k 2 --log " + log.string();
  const Result first = run(args);
  REQUIRE(first.code == 0);
  const auto doc = parse(first);
  CHECK(doc["completed"] == true);
  CHECK(doc["steps"][0]["uniform_member"] == true);
  CHECK(doc["steps"][0]["integral_point"].is_array());
  CHECK(run(args).out == first.out);

  std::ifstream in(log);
  int lines = 0;
  for (std::string line; std::getline(in, line); ++lines) {
    const auto record = nlohmann::json::parse(line);
    CHECK(record.contains("F"));
    CHECK(record.contains("ell"));
  }
  CHECK(lines == 4);
  std::filesystem::remove(log);

  const Result uu = run("probe " + data("u24_pair.json") + " -k 2");
  REQUIRE(uu.code == 0);
  CHECK(parse(uu)["steps"][0]["integral_point"].is_array());
  CHECK(run("probe " + data("u13_pair.json")).code == 3);
}

TEST_CASE("verify command") {
  const std::string file = data("two_partition_matroids.json");
  CHECK(run("verify " + file + " --blocks '0,3;1,2'").code == 0);
  const Result bad = run("verify " + file + " --blocks '0,1;2,3'");
  CHECK(bad.code == 1);
  CHECK(parse(bad)["passed"] == false);
  CHECK(run("verify " + file + " --blocks '0,3' --mode subpartition").code == 0);
  CHECK(run("verify " + file + " --blocks '0,3' --mode sideways").code == 2);
}

TEST_CASE("parse failures exit with 2") {
  CHECK(run("rank " + data("malformed.json")).code == 2);
  CHECK(run("rank " + data("does_not_exist.json")).code == 2);
  CHECK(run("partition " + data("m_u24.json")).code == 2);
  CHECK(run("rank " + data("m_u24.json") + " --bogus").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("selftest passes") {
  const Result r = run("selftest");
  CHECK(r.code == 0);
  CHECK(r.out.find("selftest passed") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across runs") {
  const std::string commands[] = {
      "partition " + data("m_k4.json") + " -k 3 --verify",
      "partition " + data("two_partition_matroids.json") + " --common --verify",
      "subpartition " + data("u24_pair.json") + " -k 4",
      "probe " + data("laminar_pair.json"),
      "union-rank " + data("m_k4.json") + " -k 2 --set 0,1,2,3",
  };
  for (const std::string& c : commands) {
    CAPTURE(c);
    const Result a = run(c);
    const Result b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
