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

#include "commands.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "unipart/errors.hpp"
#include "unipart/matroid_json.hpp"
#include "unipart/oracle/brute_force.hpp"
#include "unipart/oracle/fixtures.hpp"
#include "unipart/partition_common.hpp"
#include "unipart/partition_single.hpp"
#include "unipart/union_matroid.hpp"

namespace unipart::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string file;
  int k = 0;
  bool k_given = false;
  std::string set = "all";
  int matroid = 1;
  bool common = false;
  std::string strategy;
  std::string window = "auto";
  bool verify = false;
  std::string log;
  std::string blocks;
  std::string mode = "partition";
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, sep)) parts.push_back(piece);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

int parse_int(const std::string& token, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) {
    throw ParseError(what + ": \"" + token + "\" is not an integer");
  }
  return value;
}

// "all", "" (empty set) or a comma-separated list of indices or labels.
ElementSet parse_set(const std::string& text, const Matroid& m) {
  const std::string body = trim(text);
  if (body == "all") return m.all();
  ElementSet out;
  if (body.empty()) return out;
  for (const std::string& raw : split(body, ',')) {
    const std::string token = trim(raw);
    int e = -1;
    const auto& labels = m.ground().labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == token) e = static_cast<int>(i);
    }
    if (e < 0) e = parse_int(token, "element");
    if (e < 0 || e >= m.size()) {
      throw ParseError("element " + token + " outside the ground set");
    }
    if (out.contains(e)) throw ParseError("element " + token + " repeated");
    out.insert(e);
  }
  return out;
}

std::optional<Window> parse_window(const std::string& text) {
  if (text == "auto") return std::nullopt;
  const auto parts = split(text, ',');
  if (parts.size() != 2) {
    throw ParseError("--window expects \"auto\" or \"lo,hi\"");
  }
  const Window w{parse_int(trim(parts[0]), "window"),
                 parse_int(trim(parts[1]), "window")};
  if (w.lo < 0 || w.lo > w.hi) {
    throw ParseError("--window needs 0 <= lo <= hi");
  }
  return w;
}

Json set_json(ElementSet s) {
  Json out = Json::array();
  for (int e : s.elements()) out.push_back(e);
  return out;
}

// Blocks are unordered; print them canonically.
Json partition_json(const Partition& p) {
  Json blocks = Json::array();
  Json sizes = Json::array();
  for (ElementSet b : p.canonical().blocks) {
    blocks.push_back(set_json(b));
    sizes.push_back(b.size());
  }
  return Json{{"blocks", blocks}, {"sizes", sizes}};
}

Json report_json(const oracle::VerificationReport& report) {
  Json checks = Json::array();
  for (const oracle::Check& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed},
                      {"detail", c.detail}});
  }
  return Json{{"passed", report.passed()}, {"checks", checks}};
}

Json window_json(Window w) { return Json::array({w.lo, w.hi}); }

class Runner {
 public:
  Runner(const Options& options, std::ostream& out, std::ostream& err)
      : opt_(options), out_(out), err_(err) {}

  int rank() {
    const Instance inst = load();
    const Matroid& m = pick(inst);
    out_ << m.rank(parse_set(opt_.set, m)) << '\n';
    return kOk;
  }

  int union_rank() {
    const Instance inst = load();
    const Matroid& m = pick(inst);
    const int k = blocks(inst);
    out_ << unipart::union_rank(m, k, parse_set(opt_.set, m)) << '\n';
    return kOk;
  }

  int covering_index() {
    const Instance inst = load();
    out_ << unipart::covering_index(pick(inst)) << '\n';
    return kOk;
  }

  int partition() {
    const Instance inst = load();
    const int k = blocks(inst);
    const std::optional<Window> window = parse_window(opt_.window);
    std::vector<Matroid> used;
    Partition result;
    std::string strategy = opt_.strategy;
    if (opt_.common) {
      const CommonInstance common = common_instance(inst, k);
      if (strategy.empty()) strategy = "polyhedral";
      if (strategy != "polyhedral" && strategy != "exhaustive") {
        throw ParseError("--strategy must be polyhedral or exhaustive with "
                         "--common");
      }
      used = {common.m1, common.m2};
      try {
        result = partition_common_nearly_uniform(
            common,
            strategy == "polyhedral" ? CommonStrategy::kPolyhedral
                                     : CommonStrategy::kExhaustive,
            window);
      } catch (const StepFailure& failure) {
        Json payload{{"error", "step_failure"},
                     {"F", set_json(failure.residual())},
                     {"ell", failure.ell()},
                     {"window", window_json({failure.window_lo(),
                                             failure.window_hi()})}};
        out_ << payload.dump() << '\n';
        throw;
      }
    } else {
      if (strategy.empty()) strategy = "removal";
      if (strategy != "removal") {
        throw ParseError("--strategy must be removal without --common");
      }
      used = {pick(inst)};
      result = partition_nearly_uniform(used[0], k, window);
    }
    Json doc = partition_json(result);
    bool verified = false;
    Json report;
    if (opt_.verify) {
      const Window w = window.value_or(auto_window(used[0].size(), k));
      const auto checked = oracle::verify_partition(
          used, k, result, oracle::VerifyMode::kPartition, w);
      verified = checked.passed();
      report = report_json(checked);
    }
    doc["verified"] = verified;
    doc["strategy"] = strategy;
    if (opt_.verify) doc["report"] = report;
    out_ << doc.dump() << '\n';
    return kOk;
  }

  int subpartition() {
    const Instance inst = load();
    const int k = blocks(inst);
    const CommonInstance common = common_instance(inst, k);
    const SubpartitionResult result = subpartition_common(common);
    Json doc = partition_json(result.subpartition);
    doc["remainder"] = set_json(result.remainder);
    doc["mu1"] = result.mu1;
    doc["mu2"] = result.mu2;
    doc["swapped"] = result.swapped;
    doc["window"] = window_json(result.window);
    try {
      const auto checked = oracle::verify_partition(
          {common.m1, common.m2}, k, result.subpartition,
          oracle::VerifyMode::kSubpartition, result.window);
      doc["verified"] = checked.passed();
      doc["report"] = report_json(checked);
    } catch (const std::invalid_argument& why) {
      doc["verified"] = false;
      doc["report"] = Json{{"passed", false}, {"error", why.what()}};
    }
    out_ << doc.dump() << '\n';
    return kOk;
  }

  int probe() {
    const Instance inst = load();
    const int k = blocks(inst);
    const CommonInstance common = common_instance(inst, k);
    const std::optional<Window> window = parse_window(opt_.window);
    const std::vector<ProbeStep> steps = probe_common(common, window);
    Json records = Json::array();
    for (const ProbeStep& s : steps) {
      records.push_back(
          {{"F", set_json(s.residual)},
           {"ell", s.ell},
           {"window", window_json(s.window)},
           {"uniform_member", s.uniform_member},
           {"integral_point",
            s.integral_point ? set_json(*s.integral_point) : Json(nullptr)}});
    }
    const bool completed = static_cast<int>(steps.size()) == k &&
                           steps.back().integral_point.has_value();
    if (!opt_.log.empty()) {
      std::ofstream log(opt_.log, std::ios::app);
      if (!log) throw ParseError("cannot open log file " + opt_.log);
      for (const Json& r : records) {
        Json line{{"instance", opt_.file}, {"k", k}};
        line.update(r);
        log << line.dump() << '\n';
      }
    }
    out_ << Json{{"k", k}, {"completed", completed}, {"steps", records}}.dump()
         << '\n';
    return kOk;
  }

  int verify() {
    const Instance inst = load();
    const int k = blocks(inst);
    const std::optional<Window> window = parse_window(opt_.window);
    if (opt_.mode != "partition" && opt_.mode != "subpartition") {
      throw ParseError("--mode must be partition or subpartition");
    }
    Partition candidate;
    if (!trim(opt_.blocks).empty()) {
      for (const std::string& piece : split(opt_.blocks, ';')) {
        candidate.blocks.push_back(parse_set(piece, inst.matroids[0]));
      }
    }
    const auto report = oracle::verify_partition(
        inst.matroids, k, candidate,
        opt_.mode == "partition" ? oracle::VerifyMode::kPartition
                                 : oracle::VerifyMode::kSubpartition,
        window);
    out_ << report_json(report).dump() << '\n';
    return report.passed() ? kOk : kCheckFailed;
  }

  int selftest();

 private:
  Instance load() const { return load_instance(opt_.file); }

  const Matroid& pick(const Instance& inst) const {
    if (opt_.matroid < 1 ||
        opt_.matroid > static_cast<int>(inst.matroids.size())) {
      throw ParseError("--matroid must name one of the " +
                       std::to_string(inst.matroids.size()) +
                       " matroid(s) in the instance");
    }
    return inst.matroids[opt_.matroid - 1];
  }

  int blocks(const Instance& inst) const {
    if (opt_.k_given) {
      if (opt_.k < 1) throw ParseError("-k must be a positive integer");
      return opt_.k;
    }
    if (inst.k) return *inst.k;
    throw ParseError("k is required (pass -k or set \"k\" in the instance)");
  }

  CommonInstance common_instance(const Instance& inst, int k) const {
    if (inst.matroids.size() != 2) {
      throw ParseError("this command needs an instance with two matroids");
    }
    return CommonInstance(inst.matroids[0], inst.matroids[1], k);
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

int Runner::selftest() {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok,
                    const std::string& detail = "") {
    out_ << (ok ? "ok   " : "FAIL ") << name;
    if (!ok && !detail.empty()) out_ << ": " << detail;
    out_ << '\n';
    if (!ok) ++failures;
  };
  for (const auto& [name, m] : fixtures::all()) {
    const auto axioms = oracle::check_matroid_axioms(m);
    report(name + " rank axioms", axioms.passed, axioms.counterexample);

    bool same = true;
    for (int k = 1; k <= 4 && same; ++k) {
      const auto brute = oracle::brute_union_rank_table(m, k);
      for (std::uint64_t x = 0; x < brute.size() && same; ++x) {
        same = unipart::union_rank(m, k, ElementSet(x)) == brute[x];
      }
    }
    report(name + " union rank", same);

    const int mu = unipart::covering_index(m);
    report(name + " covering index", mu == oracle::brute_covering_index(m));

    for (int k = mu; k <= mu + 1; ++k) {
      const auto hull = oracle::check_hull_equivalence(m, k);
      report(name + " hull k=" + std::to_string(k), hull.passed());
      const Partition p = partition_nearly_uniform(m, k);
      const auto checked = oracle::verify_partition(
          {m}, k, p, oracle::VerifyMode::kPartition,
          auto_window(m.size(), k));
      report(name + " partition k=" + std::to_string(k), checked.passed(),
             checked.first_failure());
    }
  }
  const CommonInstance pq(fixtures::p2(), fixtures::q2(), 2);
  const Partition p =
      partition_common_nearly_uniform(pq, CommonStrategy::kPolyhedral);
  const auto checked = oracle::verify_partition(
      {pq.m1, pq.m2}, 2, p, oracle::VerifyMode::kPartition, Window{2, 2});
  report("P2/Q2 common partition", checked.passed(), checked.first_failure());
  report("P2/Q2 brute partition exists",
         oracle::brute_partition_exists({pq.m1, pq.m2}, 2, Window{2, 2})
             .has_value());
  out_ << (failures ? "selftest failed" : "selftest passed") << '\n';
  return failures ? kCheckFailed : kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Nearly uniform matroid partitions with exact certificates",
               "unipart"};
  app.require_subcommand(1);
  Options opt;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("instance", opt.file, "Instance JSON file")->required();
  };
  auto add_k = [&](CLI::App* sub) {
    sub->add_option("-k,--blocks-count", opt.k,
                    "Number of blocks (overrides the instance)");
  };
  auto add_matroid = [&](CLI::App* sub) {
    sub->add_option("--matroid", opt.matroid,
                    "Which matroid of the instance to use (1 or 2)");
  };
  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--window", opt.window, "auto or lo,hi");
  };

  CLI::App* rank = app.add_subcommand("rank", "Rank of a set");
  add_file(rank);
  add_matroid(rank);
  rank->add_option("--set", opt.set, "all, or comma-separated elements");

  CLI::App* union_rank =
      app.add_subcommand("union-rank", "Rank of a set in the k-fold union");
  add_file(union_rank);
  add_k(union_rank);
  add_matroid(union_rank);
  union_rank->add_option("--set", opt.set, "all, or comma-separated elements");

  CLI::App* covering = app.add_subcommand(
      "covering-index", "Fewest independent sets covering the ground set");
  add_file(covering);
  add_matroid(covering);

  CLI::App* partition =
      app.add_subcommand("partition", "Nearly uniform partition into k sets");
  add_file(partition);
  add_k(partition);
  add_matroid(partition);
  add_window(partition);
  partition->add_flag("--common", opt.common,
                      "Common independent sets of both matroids");
  partition->add_option("--strategy", opt.strategy,
                        "removal (single), polyhedral or exhaustive (common)");
  partition->add_flag("--verify", opt.verify,
                      "Check the result with the exhaustive oracle");

  CLI::App* subpartition = app.add_subcommand(
      "subpartition", "Nearly uniform common subpartition");
  add_file(subpartition);
  add_k(subpartition);

  CLI::App* probe = app.add_subcommand(
      "probe", "Per-step record of the polyhedral two-matroid procedure");
  add_file(probe);
  add_k(probe);
  add_window(probe);
  probe->add_option("--log", opt.log, "Append step records as JSON lines");

  CLI::App* verify =
      app.add_subcommand("verify", "Check a (sub)partition with the oracle");
  add_file(verify);
  add_k(verify);
  add_window(verify);
  verify->add_option("--blocks", opt.blocks,
                     "Blocks as \"0,3;1,2\" (empty string: no blocks)")
      ->required();
  verify->add_option("--mode", opt.mode, "partition or subpartition");

  CLI::App* selftest =
      app.add_subcommand("selftest", "Cross-check the toolkit on fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }
  for (CLI::App* sub : app.get_subcommands()) {
    if (auto* k = sub->get_option_no_throw("-k"); k && k->count() > 0) {
      opt.k_given = true;
    }
  }

  Runner runner(opt, out, err);
  try {
    if (rank->parsed()) return runner.rank();
    if (union_rank->parsed()) return runner.union_rank();
    if (covering->parsed()) return runner.covering_index();
    if (partition->parsed()) return runner.partition();
    if (subpartition->parsed()) return runner.subpartition();
    if (probe->parsed()) return runner.probe();
    if (verify->parsed()) return runner.verify();
    if (selftest->parsed()) return runner.selftest();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const StepFailure& e) {
    err << "step failure: " << e.what() << '\n';
    return kStepFailure;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kParseError;
}

}  // namespace unipart::cli
