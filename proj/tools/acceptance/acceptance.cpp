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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "unipart/matroid.hpp"
#include "unipart/oracle/brute_force.hpp"
#include "unipart/oracle/fixtures.hpp"
#include "unipart/oracle/generators.hpp"
#include "unipart/partition_common.hpp"
#include "unipart/partition_single.hpp"
#include "unipart/polyhedra.hpp"
#include "unipart/union_matroid.hpp"

namespace {

using namespace unipart;
using oracle::Rng;
using oracle::uniform_int;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::uint64_t seed;
  std::function<Outcome(Rng&)> body;
};

std::string set_string(ElementSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int e : s.elements()) {
    out << (first ? "" : ",") << e;
    first = false;
  }
  out << '}';
  return out.str();
}

Rational sample_rational(Rng& rng, int lo, int hi) {
  const int den = uniform_int(rng, 1, 6);
  return Rational(uniform_int(rng, lo * den, hi * den), den);
}

RationalPoint sample_point(Rng& rng, int n, int lo, int hi) {
  std::vector<Rational> coords;
  for (int i = 0; i < n; ++i) coords.push_back(sample_rational(rng, lo, hi));
  return RationalPoint(std::move(coords));
}

bool below(const RationalPoint& x, const SetFunction& f) {
  for (std::uint64_t m = 0; m < f.table().size(); ++m) {
    if (x.sum(ElementSet(m)) > f(ElementSet(m))) return false;
  }
  return true;
}

bool above(const RationalPoint& x, const SetFunction& g) {
  for (std::uint64_t m = 0; m < g.table().size(); ++m) {
    if (x.sum(ElementSet(m)) < g(ElementSet(m))) return false;
  }
  return true;
}

bool in_box(const RationalPoint& x, const BoundVector& lo,
            const BoundVector& hi) {
  for (int e = 0; e < x.size(); ++e) {
    if (lo[e] && x[e] < *lo[e]) return false;
    if (hi[e] && x[e] > *hi[e]) return false;
  }
  return true;
}

std::vector<std::pair<std::string, Matroid>> loop_free_fixtures() {
  std::vector<std::pair<std::string, Matroid>> out;
  for (auto& [name, m] : fixtures::all()) {
    if (m.loops().empty()) out.emplace_back(name, m);
  }
  return out;
}

// Shared instance pools, built once from fixed seeds.
struct SingleInstance {
  std::string name;
  Matroid m;
  int k;
};

struct PairInstance {
  Matroid m1;
  Matroid m2;
  int k;
};

std::vector<SingleInstance> hull_pool() {
  std::vector<SingleInstance> pool;
  for (auto& [name, m] : loop_free_fixtures()) {
    const int mu = covering_index(m);
    for (int k = mu; k <= mu + 1; ++k) pool.push_back({name, m, k});
  }
  Rng rng(2002);
  for (int i = 0; i < 200; ++i) {
    const Matroid m = oracle::random_matroid(rng, uniform_int(rng, 1, 7));
    const int k = covering_index(m) + uniform_int(rng, 0, 2);
    pool.push_back({"random#" + std::to_string(i), m, k});
  }
  return pool;
}

std::vector<PairInstance> laminar_pool() {
  std::vector<PairInstance> pool;
  Rng rng(4004);
  for (int i = 0; i < 100; ++i) {
    const int n = uniform_int(rng, 2, 10);
    Matroid a = oracle::random_laminar(rng, n);
    Matroid b = oracle::random_laminar(rng, n);
    const int k = std::max(covering_index(a), covering_index(b));
    pool.push_back({std::move(a), std::move(b), k});
  }
  return pool;
}

// Criterion 1.
Outcome union_rank_equivalence(Rng& rng) {
  Outcome o;
  std::vector<std::pair<std::string, Matroid>> pool = fixtures::all();
  for (int i = 0; i < 50; ++i) {
    pool.emplace_back("random#" + std::to_string(i),
                      oracle::random_matroid(rng, uniform_int(rng, 1, 8), true));
  }
  long compared = 0;
  for (const auto& [name, m] : pool) {
    for (int k = 1; k <= 4; ++k) {
      const std::vector<int> brute = oracle::brute_union_rank_table(m, k);
      for (std::uint64_t x = 0; x < brute.size(); ++x) {
        const int got = union_rank(m, k, ElementSet(x));
        ++compared;
        if (got != brute[x]) {
          o.fail(name + " k=" + std::to_string(k) + " X=" +
                 set_string(ElementSet(x)) + ": " + std::to_string(got) +
                 " vs " + std::to_string(brute[x]));
        }
      }
    }
  }
  if (o.passed) o.detail = std::to_string(compared) + " comparisons";
  return o;
}

// Criterion 2.
Outcome hull_equivalence(Rng&) {
  Outcome o;
  const auto pool = hull_pool();
  for (const auto& inst : pool) {
    const oracle::HullReport r = oracle::check_hull_equivalence(inst.m, inst.k);
    if (!r.passed()) {
      o.fail(inst.name + " k=" + std::to_string(inst.k) + " at " +
             set_string(r.discrepancies.front().set));
    }
  }
  if (o.passed) o.detail = std::to_string(pool.size()) + " instances";
  return o;
}

// Criterion 3.
Outcome single_partition(Rng&) {
  Outcome o;
  auto pool = hull_pool();
  for (int k : {2, 3}) pool.push_back({"K4", fixtures::k4(), k});
  for (const auto& inst : pool) {
    try {
      const Partition p = partition_nearly_uniform(inst.m, inst.k);
      const auto report = oracle::verify_partition(
          {inst.m}, inst.k, p, oracle::VerifyMode::kPartition);
      if (!report.passed() || p.spread() > 1) {
        o.fail(inst.name + " k=" + std::to_string(inst.k) + ": " +
               report.first_failure());
      }
    } catch (const std::exception& e) {
      o.fail(inst.name + " k=" + std::to_string(inst.k) + ": " + e.what());
    }
  }
  if (o.passed) o.detail = std::to_string(pool.size()) + " instances";
  return o;
}

// Criterion 4.
Outcome laminar_pairs(Rng&) {
  Outcome o;
  const auto pool = laminar_pool();
  int failures = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto& inst = pool[i];
    const std::string label = "pair#" + std::to_string(i) +
                              " n=" + std::to_string(inst.m1.size()) +
                              " k=" + std::to_string(inst.k);
    try {
      const CommonInstance common(inst.m1, inst.m2, inst.k);
      const Partition p =
          partition_common_nearly_uniform(common, CommonStrategy::kPolyhedral);
      const auto report = oracle::verify_partition(
          {inst.m1, inst.m2}, inst.k, p, oracle::VerifyMode::kPartition);
      if (!report.passed() || p.spread() > 1) {
        ++failures;
        o.fail(label + ": " + report.first_failure());
      }
    } catch (const std::exception& e) {
      ++failures;
      o.fail(label + ": " + e.what());
    }
  }
  if (o.passed) {
    o.detail = std::to_string(pool.size()) + " pairs, 0 step failures";
  } else {
    o.detail += " (" + std::to_string(failures) + " failing pairs)";
  }
  return o;
}

// Criterion 5.
Outcome subpartitions(Rng& rng) {
  Outcome o;
  int built = 0;
  while (built < 50) {
    const int n = uniform_int(rng, 1, 10);
    Matroid a = oracle::random_matroid(rng, n);
    Matroid b = oracle::random_matroid(rng, n);
    int mu1 = covering_index(a), mu2 = covering_index(b);
    if (std::max(mu1, mu2) >= 5) continue;
    if (mu1 > mu2) {
      std::swap(a, b);
      std::swap(mu1, mu2);
    }
    const int k = uniform_int(rng, mu2 + 1, 5);
    const std::string label = "instance#" + std::to_string(built) +
                              " n=" + std::to_string(n) +
                              " k=" + std::to_string(k);
    ++built;
    try {
      const SubpartitionResult r = subpartition_common(CommonInstance(a, b, k));
      const int expected = k - mu2 - 1;
      const Partition& p = r.subpartition;
      if (static_cast<int>(p.blocks.size()) != expected) {
        o.fail(label + ": " + std::to_string(p.blocks.size()) + " blocks, "
               "expected " + std::to_string(expected));
        continue;
      }
      if (p.spread() > 1) o.fail(label + ": spread above one");
      const auto report = oracle::verify_partition(
          {a, b}, k, p, oracle::VerifyMode::kSubpartition);
      if (!report.passed()) o.fail(label + ": " + report.first_failure());
      const int copies = mu2 + 1;
      const int rest = r.remainder.size();
      if (oracle::brute_union_rank(a, copies, r.remainder) != rest ||
          oracle::brute_union_rank(b, copies, r.remainder) != rest) {
        o.fail(label + ": remainder not in both unions");
      }
      if ((p.covered() | r.remainder) != a.all() ||
          !(p.covered() & r.remainder).empty()) {
        o.fail(label + ": blocks and remainder do not split E");
      }
    } catch (const std::exception& e) {
      o.fail(label + ": " + e.what());
    }
  }
  if (o.passed) o.detail = std::to_string(built) + " instances";
  return o;
}

// Criterion 6.
Outcome covering_closed_form(Rng& rng) {
  Outcome o;
  auto pool = loop_free_fixtures();
  for (int i = 0; i < 50; ++i) {
    pool.emplace_back("random#" + std::to_string(i),
                      oracle::random_matroid(rng, uniform_int(rng, 1, 8)));
  }
  for (const auto& [name, m] : pool) {
    const int got = covering_index(m);
    const int want = oracle::brute_covering_index(m);
    if (got != want) {
      o.fail(name + ": " + std::to_string(got) + " vs " + std::to_string(want));
    }
  }
  if (o.passed) o.detail = std::to_string(pool.size()) + " matroids";
  return o;
}

// Criterion 7.
Outcome polyhedral_identities(Rng& rng) {
  Outcome o;
  long points = 0;
  for (const auto& [name, m] : fixtures::all()) {
    const int n = m.size();
    const SetFunction f = matroid_set_function(m, MatroidFunctionKind::kRank);
    const SetFunction g =
        matroid_set_function(m, MatroidFunctionKind::kCospanningDual);

    if (dual_supermodular(dual_supermodular(f)) != f) {
      o.fail(name + ": dual is not an involution");
    }

    const PolyhedronDescription bf = base_polyhedron(f);
    const PolyhedronDescription bfd = base_polyhedron(dual_supermodular(f));
    for (int trial = 0; trial < 100; ++trial, ++points) {
      RationalPoint x = sample_point(rng, n, -1, 2);
      if (trial % 2 == 0) {  // Put half the samples on x(E) = f(E).
        x[n - 1] = 0;
        x[n - 1] = f(m.all()) - x.sum(m.all());
      }
      if (membership(x, bf).member != membership(x, bfd).member) {
        o.fail(name + ": B(f) and B(f#) disagree at " + x.to_string());
      }
    }

    for (int trial = 0; trial < 100; ++trial, ++points) {
      BoundVector upper = unbounded(n), lower = unbounded(n);
      for (int e = 0; e < n; ++e) {
        if (uniform_int(rng, 0, 3) > 0) upper[e] = sample_rational(rng, 0, 2);
        if (uniform_int(rng, 0, 3) > 0) lower[e] = sample_rational(rng, -1, 1);
      }
      const RationalPoint x = sample_point(rng, n, -1, 2);
      if ((below(x, f) && in_box(x, unbounded(n), upper)) !=
          below(x, tighten_upper(f, upper))) {
        o.fail(name + ": tightened upper function differs at " + x.to_string());
      }
      if ((above(x, g) && in_box(x, lower, unbounded(n))) !=
          above(x, tighten_lower(g, lower))) {
        o.fail(name + ": tightened lower function differs at " + x.to_string());
      }
    }

    if (n > 4) continue;
    for (const SetFunction& lower :
         {SetFunction::zero(n, Modularity::kSupermodular), dual_supermodular(f),
          g}) {
      if (!is_gpolymatroid_pair(f, lower)) continue;
      PolyhedronDescription q(n);
      q.add(UpperConstraint{f}).add(LowerConstraint{lower});
      const Rational t1 = f(m.all());
      const Rational t2(7, 3);
      const auto b1 = base_polyhedron(lift_gpolymatroid(f, lower, t1));
      const auto b2 = base_polyhedron(lift_gpolymatroid(f, lower, t2));
      auto agree = [&](const RationalPoint& x) {
        ++points;
        const bool in_q = membership(x, q).member;
        if (membership(lift_point(x, t1), b1).member != in_q ||
            membership(lift_point(x, t2), b2).member != in_q) {
          o.fail(name + ": lift projection differs at " + x.to_string());
        }
      };
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        agree(RationalPoint::indicator(n, ElementSet(x)));
      }
      for (int trial = 0; trial < 100; ++trial) {
        agree(sample_point(rng, n, -1, 2));
      }
    }
  }
  if (o.passed) o.detail = std::to_string(points) + " points";
  return o;
}

// Criterion 8.
Outcome uniform_point(Rng&) {
  Outcome o;
  int checked = 0;
  auto check = [&](const std::string& label, const Matroid& a, const Matroid& b,
                   int k) {
    const CommonInstance inst(a, b, k);
    const FourPolyhedra step = four_polyhedra(inst, inst.all(), 0, std::nullopt);
    const RationalPoint x = RationalPoint::constant(inst.size(), Rational(1, k));
    const Membership mem = membership(x, step.description);
    ++checked;
    if (!mem.member) o.fail(label + ": " + mem.violation->to_string());
  };
  auto singles = hull_pool();
  for (int k : {2, 3}) singles.push_back({"K4", fixtures::k4(), k});
  for (const auto& s : singles) check(s.name, s.m, s.m, s.k);
  const auto pairs = laminar_pool();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    check("pair#" + std::to_string(i), pairs[i].m1, pairs[i].m2, pairs[i].k);
  }
  if (o.passed) o.detail = std::to_string(checked) + " instances";
  return o;
}

// Criterion 9.
std::pair<int, std::string> run_command(const std::string& command) {
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_determinism(const std::string& cli, const std::string& data) {
  Outcome o;
  const std::vector<std::string> commands{
      "rank " + data + "/m_u24.json --set 0,1,2",
      "union-rank " + data + "/m_k4.json -k 2 --set all",
      "covering-index " + data + "/m_k4.json",
      "partition " + data + "/m_k4.json -k 3 --verify",
      "partition " + data + "/two_partition_matroids.json --common --verify",
      "partition " + data + "/laminar_pair.json --common --strategy exhaustive",
      "subpartition " + data + "/u24_pair.json -k 4",
      "probe " + data + "/two_partition_matroids.json",
      "verify " + data + "/two_partition_matroids.json --blocks '0,1;2,3'",
      "partition " + data + "/m_u13.json -k 2",
      "rank " + data + "/malformed.json",
      "selftest",
  };
  for (const std::string& c : commands) {
    const auto first = run_command(cli + " " + c);
    const auto second = run_command(cli + " " + c);
    if (first.first < 0 || first != second) o.fail("differs: " + c);
  }
  if (o.passed) o.detail = std::to_string(commands.size()) + " commands twice";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("unipart acceptance suite");
  std::string cli_path;
  std::string data_dir;
  app.add_option("--cli", cli_path, "path to the unipart executable")->required();
  app.add_option("--data", data_dir, "directory with instance files")->required();
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "union rank equals brute force", 60, 1001, union_rank_equivalence},
      {2, "removal polytope 0/1 points", 60, 2002, hull_equivalence},
      {3, "single matroid partitions", 60, 2002, single_partition},
      {4, "laminar pairs, polyhedral strategy", 300, 4004, laminar_pairs},
      {5, "common subpartitions", 300, 5005, subpartitions},
      {6, "covering index closed form", 30, 6006, covering_closed_form},
      {7, "dual, tightening and lift identities", 60, 7007, polyhedral_identities},
      {8, "uniform point at the first step", 30, 4004, uniform_point},
      {9, "CLI determinism", 60, 0,
       [&](Rng&) { return cli_determinism(cli_path, data_dir); }},
  };

  bool all_passed = true;
  for (const Criterion& c : criteria) {
    Rng rng(c.seed);
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body(rng);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (seconds > c.budget_seconds) {
      o.fail("over time budget of " + std::to_string(c.budget_seconds) + " s");
    }
    all_passed = all_passed && o.passed;
    std::cout << "criterion " << c.id << ": " << (o.passed ? "PASS" : "FAIL")
              << "  " << c.title << "  [" << std::fixed << std::setprecision(2)
              << seconds << " s, seed " << c.seed << "]  " << o.detail
              << std::endl;
  }
  return all_passed ? 0 : 1;
}
