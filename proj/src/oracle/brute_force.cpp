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

#include "unipart/oracle/brute_force.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace unipart::oracle {
namespace {

// best[j][Z] over the subsets Z of `support`, stored by local mask.
std::vector<int> union_levels(const Matroid& m, int k, ElementSet support) {
  const int width = support.size();
  if (width > kBruteUnionMaxElements) {
    throw std::invalid_argument("brute_union_rank supports |X| <= " +
                                std::to_string(kBruteUnionMaxElements));
  }
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  const std::size_t count = std::size_t{1} << width;
  std::vector<char> independent(count);
  for (std::uint64_t z = 0; z < count; ++z) {
    independent[z] = m.is_independent(deposit(ElementSet(z), support));
  }
  std::vector<int> best(count, 0);
  // More than |X| copies never helps.
  const int levels = std::min(k, width);
  for (int level = 1; level <= levels; ++level) {
    std::vector<int> next(count, 0);
    for (std::uint64_t z = 0; z < count; ++z) {
      int top = best[z];
      for_each_subset(ElementSet(z), [&](ElementSet piece) {
        if (!independent[piece.bits()]) return;
        top = std::max(top, piece.size() + best[z & ~piece.bits()]);
      });
      next[z] = top;
    }
    best = std::move(next);
  }
  return best;
}

std::string block_text(ElementSet b) { return b.to_string(); }

void require_matroids(const std::vector<Matroid>& matroids) {
  if (matroids.empty() || matroids.size() > 2) {
    throw std::invalid_argument("expected one or two matroids");
  }
  if (matroids.size() == 2 && matroids[0].size() != matroids[1].size()) {
    throw std::invalid_argument("matroids have different ground sets");
  }
}

class Backtracker {
 public:
  Backtracker(const std::vector<Matroid>& matroids, int k, Window window)
      : n_(matroids[0].size()), window_(window), blocks_(k) {
    const std::size_t count = std::size_t{1} << n_;
    independent_.assign(count, 1);
    for (const Matroid& m : matroids) {
      for (std::uint64_t z = 0; z < count; ++z) {
        if (independent_[z] && !m.is_independent(ElementSet(z))) {
          independent_[z] = 0;
        }
      }
    }
  }

  std::optional<Partition> solve() {
    if (place(0)) return Partition{blocks_};
    return std::nullopt;
  }

 private:
  bool place(int e) {
    if (e == n_) {
      return std::all_of(blocks_.begin(), blocks_.end(), [&](ElementSet b) {
        return b.size() >= window_.lo;
      });
    }
    int missing = 0;
    for (ElementSet b : blocks_) missing += std::max(0, window_.lo - b.size());
    if (missing > n_ - e) return false;
    bool opened = false;
    for (ElementSet& b : blocks_) {
      // Empty blocks are interchangeable; only try the first one.
      if (b.empty()) {
        if (opened) continue;
        opened = true;
      }
      if (b.size() >= window_.hi) continue;
      const ElementSet trial = b.with(e);
      if (!independent_[trial.bits()]) continue;
      b = trial;
      if (place(e + 1)) return true;
      b = b.without(e);
    }
    return false;
  }

  int n_;
  Window window_;
  std::vector<ElementSet> blocks_;
  std::vector<char> independent_;
};

}  // namespace

std::vector<int> brute_union_rank_table(const Matroid& m, int k) {
  return union_levels(m, k, m.all());
}

int brute_union_rank(const Matroid& m, int k, ElementSet x) {
  if (!x.subset_of(m.all())) {
    throw std::out_of_range("set " + x.to_string() + " leaves the ground set");
  }
  const std::vector<int> best = union_levels(m, k, x);
  return best.back();
}

std::optional<Partition> brute_partition_exists(
    const std::vector<Matroid>& matroids, int k, std::optional<Window> window) {
  require_matroids(matroids);
  const int n = matroids[0].size();
  if (n > 12) throw std::invalid_argument("brute_partition_exists needs n <= 12");
  if (k < 1 || k > 12) throw std::invalid_argument("k must lie in [1, 12]");
  const Window w = window.value_or(Window{0, n});
  if (w.lo > w.hi) return std::nullopt;
  return Backtracker(matroids, k, w).solve();
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

std::string VerificationReport::first_failure() const {
  for (const Check& c : checks) {
    if (!c.passed) return c.name + ": " + c.detail;
  }
  return "";
}

VerificationReport verify_partition(const std::vector<Matroid>& matroids, int k,
                                    const Partition& candidate, VerifyMode mode,
                                    std::optional<Window> window) {
  require_matroids(matroids);
  if (k < 1) throw std::invalid_argument("malformed input: k must be >= 1");
  const ElementSet ground = matroids[0].all();
  const int count = static_cast<int>(candidate.blocks.size());
  VerificationReport report;

  Check shape{"block_count", true,
              std::to_string(count) + (count == 1 ? " block" : " blocks")};
  if (mode == VerifyMode::kPartition ? count != k : count > k) {
    shape.passed = false;
    shape.detail += mode == VerifyMode::kPartition
                        ? ", expected " + std::to_string(k)
                        : ", expected at most " + std::to_string(k);
  }
  report.checks.push_back(shape);

  Check inside{"within_ground_set", true, ""};
  for (ElementSet b : candidate.blocks) {
    if (!b.subset_of(ground)) {
      inside.passed = false;
      inside.detail = block_text(b) + " leaves the ground set";
      break;
    }
  }
  report.checks.push_back(inside);

  Check disjoint{"disjoint", true, ""};
  ElementSet seen;
  for (ElementSet b : candidate.blocks) {
    if (!(seen & b).empty()) {
      disjoint.passed = false;
      disjoint.detail = "element(s) " + (seen & b).to_string() + " repeated";
      break;
    }
    seen = seen | b;
  }
  report.checks.push_back(disjoint);

  const ElementSet remainder = ground - seen;
  if (mode == VerifyMode::kPartition) {
    Check cover{"covers_ground_set", remainder.empty(), ""};
    if (!cover.passed) cover.detail = remainder.to_string() + " uncovered";
    report.checks.push_back(cover);
  }

  for (std::size_t i = 0; i < matroids.size(); ++i) {
    const std::string name = "M" + std::to_string(i + 1);
    Check indep{"independent_in_" + name, true, ""};
    for (ElementSet b : candidate.blocks) {
      if (inside.passed && !matroids[i].is_independent(b)) {
        indep.passed = false;
        indep.detail = block_text(b) + " dependent in " + name;
        break;
      }
    }
    report.checks.push_back(indep);
  }

  int lo = count ? candidate.blocks[0].size() : 0;
  int hi = lo;
  for (ElementSet b : candidate.blocks) {
    lo = std::min(lo, b.size());
    hi = std::max(hi, b.size());
  }
  // A wider explicit window replaces the near-uniformity requirement.
  if (!window || window->hi - window->lo <= 1) {
    Check spread{"spread_at_most_one", hi - lo <= 1,
                 "sizes in [" + std::to_string(lo) + "," + std::to_string(hi) +
                     "]"};
    report.checks.push_back(spread);
  }

  if (window) {
    Check fits{"window", true,
               "[" + std::to_string(window->lo) + "," +
                   std::to_string(window->hi) + "]"};
    for (ElementSet b : candidate.blocks) {
      if (!window->contains(b.size())) {
        fits.passed = false;
        fits.detail = block_text(b) + " outside " + fits.detail;
        break;
      }
    }
    report.checks.push_back(fits);
  }

  if (mode == VerifyMode::kSubpartition) {
    const int copies = std::max(0, k - count);
    for (std::size_t i = 0; i < matroids.size(); ++i) {
      const std::string name = "M" + std::to_string(i + 1);
      Check rest{"remainder_in_" + name + "^" + std::to_string(copies), true,
                 "remainder " + remainder.to_string()};
      if (inside.passed &&
          brute_union_rank(matroids[i], copies, remainder) !=
              remainder.size()) {
        rest.passed = false;
        rest.detail += " is not a union of " + std::to_string(copies) +
                       " independent sets of " + name;
      }
      report.checks.push_back(rest);
    }
  }
  return report;
}

HullReport check_hull_equivalence(const Matroid& m, int k, HullForm form) {
  const int n = m.size();
  if (n > 7) throw std::invalid_argument("check_hull_equivalence needs n <= 7");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const ElementSet ground = m.all();
  if (brute_union_rank(m, k, ground) != n) {
    throw std::invalid_argument("E is not a union of k independent sets");
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<int> rank(count);
  for (std::uint64_t y = 0; y < count; ++y) rank[y] = m.rank(ElementSet(y));
  const std::vector<int> lower_ranks = brute_union_rank_table(m, k - 1);
  const std::uint64_t full = ground.bits();
  std::vector<int> g(count);
  for (std::uint64_t y = 0; y < count; ++y) {
    g[y] = form == HullForm::kCospanning
               ? std::popcount(y) - lower_ranks[y]
               : lower_ranks[full] - lower_ranks[full & ~y];
  }

  HullReport report;
  report.copies = k;
  report.form = form;
  for (std::uint64_t x = 0; x < count; ++x) {
    bool in_polytope = true;
    for (std::uint64_t y = 0; y < count && in_polytope; ++y) {
      const int value = std::popcount(x & y);
      in_polytope = value <= rank[y] && value >= g[y];
    }
    const std::uint64_t rest = full & ~x;
    const bool in_family = rank[x] == std::popcount(x) &&
                           lower_ranks[rest] == std::popcount(rest);
    if (in_polytope) report.polytope_members.push_back(ElementSet(x));
    if (in_polytope != in_family) {
      report.discrepancies.push_back({ElementSet(x), in_polytope, in_family});
    }
  }
  return report;
}

AxiomReport check_rank_axioms(int n, const std::vector<int>& table) {
  if (n < 0 || n > 12) throw std::invalid_argument("axiom check needs n <= 12");
  const std::size_t count = std::size_t{1} << n;
  if (table.size() != count) {
    throw std::invalid_argument("rank table must have 2^n entries");
  }
  auto fail = [](std::string text) { return AxiomReport{false, std::move(text)}; };
  auto r = [&](std::uint64_t x) {
    return "rank(" + ElementSet(x).to_string() + ") = " +
           std::to_string(table[x]);
  };
  if (table[0] != 0) return fail("normalization: " + r(0));
  for (std::uint64_t x = 0; x < count; ++x) {
    for (int e = 0; e < n; ++e) {
      const std::uint64_t bit = std::uint64_t{1} << e;
      if (x & bit) continue;
      const int step = table[x | bit] - table[x];
      if (step > 1) return fail("unit increase: " + r(x | bit) + ", " + r(x));
      if (step < 0) return fail("monotonicity: " + r(x | bit) + ", " + r(x));
    }
  }
  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::uint64_t y = x + 1; y < count; ++y) {
      if (table[x] + table[y] < table[x | y] + table[x & y]) {
        return fail("submodularity: " + r(x) + ", " + r(y) + ", " + r(x | y) +
                    ", " + r(x & y));
      }
    }
  }
  return {};
}

AxiomReport check_matroid_axioms(const Matroid& m) {
  const int n = m.size();
  if (n > 12) throw std::invalid_argument("axiom check needs n <= 12");
  std::vector<int> table(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < table.size(); ++x) {
    table[x] = m.rank(ElementSet(x));
  }
  return check_rank_axioms(n, table);
}

int brute_covering_index(const Matroid& m) {
  const int n = m.size();
  if (n > 20) throw std::invalid_argument("covering index oracle needs n <= 20");
  int best = 0;
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
    const int r = m.rank(ElementSet(x));
    if (r == 0) throw std::invalid_argument("matroid has a loop");
    const int size = std::popcount(x);
    best = std::max(best, (size + r - 1) / r);
  }
  return best;
}

}  // namespace unipart::oracle
