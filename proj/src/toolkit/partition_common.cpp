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

#include "unipart/partition_common.hpp"

#include <stdexcept>
#include <string>

#include "unipart/errors.hpp"
#include "unipart/union_matroid.hpp"

namespace unipart {

CommonInstance::CommonInstance(Matroid first, Matroid second, int blocks)
    : m1(std::move(first)), m2(std::move(second)), k(blocks) {
  if (m1.size() != m2.size()) {
    throw std::invalid_argument("matroids have different ground sets");
  }
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

namespace {

void check_step(const CommonInstance& inst, ElementSet residual, int ell) {
  if (ell < 0 || ell >= inst.k) {
    throw std::invalid_argument("step index must lie in [0, k-1]");
  }
  if (!residual.subset_of(inst.all())) {
    throw std::invalid_argument("residual set leaves the ground set");
  }
}

void require_cover(const CommonInstance& inst) {
  const char* names[] = {"E ∉ I_1^k", "E ∉ I_2^k"};
  int index = 0;
  for (const Matroid* m : {&inst.m1, &inst.m2}) {
    const UnionDecomposition d = max_union_coloring(*m, inst.k, inst.all());
    if (!d.uncovered.empty()) {
      throw InfeasibleError(std::string(names[index]) + " for k=" +
                                std::to_string(inst.k) + " (certificate Y=" +
                                d.certificate.to_string() + ")",
                            d.certificate);
    }
    ++index;
  }
}

std::vector<int> restricted_ranks(const Matroid& m, ElementSet residual) {
  const int width = residual.size();
  if (width > kSetFunctionCap) {
    throw std::invalid_argument("four-polyhedra need |F| <= 20");
  }
  std::vector<int> ranks(std::size_t{1} << width);
  for (std::uint64_t local = 0; local < ranks.size(); ++local) {
    ranks[local] = m.rank(deposit(ElementSet(local), residual));
  }
  return ranks;
}

// Next mask with the same popcount (Gosper).
std::uint64_t next_same_size(std::uint64_t v) {
  const std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

bool is_common_independent(const CommonInstance& inst, ElementSet s) {
  return inst.m1.is_independent(s) && inst.m2.is_independent(s);
}

// Depth-first assignment of elements to blocks, first fit in canonical order.
class BlockSearch {
 public:
  BlockSearch(const CommonInstance& inst, Window window)
      : inst_(inst), window_(window), blocks_(inst.k) {}

  std::optional<Partition> run() {
    if (assign(0)) return Partition{blocks_};
    return std::nullopt;
  }

 private:
  bool assign(int e) {
    const int n = inst_.size();
    if (e == n) {
      for (ElementSet b : blocks_) {
        if (b.size() < window_.lo) return false;
      }
      return true;
    }
    int deficit = 0;
    for (ElementSet b : blocks_) deficit += std::max(0, window_.lo - b.size());
    if (deficit > n - e) return false;
    bool tried_empty = false;
    for (ElementSet& b : blocks_) {
      if (b.empty()) {
        if (tried_empty) continue;
        tried_empty = true;
      }
      if (b.size() >= window_.hi) continue;
      const ElementSet grown = b.with(e);
      if (!is_common_independent(inst_, grown)) continue;
      b = grown;
      if (assign(e + 1)) return true;
      b = b.without(e);
    }
    return false;
  }

  const CommonInstance& inst_;
  Window window_;
  std::vector<ElementSet> blocks_;
};

}  // namespace

bool in_common_removal_family(const CommonInstance& inst, ElementSet residual,
                              int ell, ElementSet x) {
  check_step(inst, residual, ell);
  if (!x.subset_of(residual)) {
    throw std::invalid_argument("X must be a subset of F");
  }
  const int copies = inst.k - ell - 1;
  for (const Matroid* m : {&inst.m1, &inst.m2}) {
    if (!m->is_independent(x)) return false;
    if (!is_in_union(*m, copies, residual - x)) return false;
  }
  return true;
}

FourPolyhedra four_polyhedra(const CommonInstance& inst, ElementSet residual,
                             int ell, std::optional<Window> window,
                             RemovalBound bound) {
  check_step(inst, residual, ell);
  const int width = residual.size();
  const int copies = inst.k - ell;
  PolyhedronDescription d =
      removal_polyhedron(restricted_ranks(inst.m1, residual), width, copies,
                         bound);
  d.intersect(removal_polyhedron(restricted_ranks(inst.m2, residual), width,
                                 copies, bound));
  if (window) {
    if (window->lo > window->hi) {
      throw std::invalid_argument("window with lo > hi");
    }
    d = unipart::window(std::move(d), window->lo, window->hi);
  }
  return FourPolyhedra{residual, ell, std::move(d)};
}

std::optional<ElementSet> four_polyhedra_integral_point(
    const CommonInstance& inst, ElementSet residual, int ell,
    std::optional<Window> window) {
  const FourPolyhedra four = four_polyhedra(inst, residual, ell, window);
  const int width = residual.size();
  const int lo = window ? std::max(window->lo, 0) : 0;
  const int hi = window ? std::min(window->hi, width) : width;
  for (int size = lo; size <= hi; ++size) {
    const std::uint64_t limit = std::uint64_t{1} << width;
    std::uint64_t mask = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
    while (mask < limit) {
      const ElementSet local(mask);
      if (contains_indicator(four.description, local)) {
        const ElementSet found = deposit(local, residual);
        if (!in_common_removal_family(inst, residual, ell, found)) {
          throw std::logic_error("integral point " + found.to_string() +
                                 " is not in the common removal family");
        }
        return found;
      }
      if (size == 0) break;
      mask = next_same_size(mask);
    }
  }
  return std::nullopt;
}

Partition partition_common_nearly_uniform(const CommonInstance& inst,
                                          CommonStrategy strategy,
                                          std::optional<Window> window) {
  require_cover(inst);
  const Window w = window.value_or(auto_window(inst.size(), inst.k));
  if (w.lo > w.hi) throw std::invalid_argument("window with lo > hi");

  if (strategy == CommonStrategy::kExhaustive) {
    if (auto found = BlockSearch(inst, w).run()) return *found;
    throw InfeasibleError("no partition into " + std::to_string(inst.k) +
                          " common independent sets with sizes in [" +
                          std::to_string(w.lo) + "," + std::to_string(w.hi) +
                          "]");
  }

  Partition out;
  ElementSet residual = inst.all();
  for (int ell = 0; ell < inst.k; ++ell) {
    const Window step = step_window(w, residual.size(), inst.k - ell);
    if (step.lo > step.hi) {
      if (!window) {
        throw std::logic_error("running window became empty at step " +
                               std::to_string(ell));
      }
      throw InfeasibleError(std::to_string(residual.size()) +
                            " elements cannot fill " +
                            std::to_string(inst.k - ell) +
                            " blocks with sizes in [" + std::to_string(w.lo) +
                            "," + std::to_string(w.hi) + "]");
    }
    const auto block = four_polyhedra_integral_point(inst, residual, ell, step);
    if (!block) throw StepFailure(residual, ell, step.lo, step.hi);
    out.blocks.push_back(*block);
    residual = residual - *block;
  }
  if (!residual.empty()) {
    throw std::logic_error("polyhedral procedure left elements uncovered");
  }
  return out;
}

SubpartitionResult subpartition_common(const CommonInstance& inst) {
  require_cover(inst);
  SubpartitionResult out;
  int mu1 = covering_index(inst.m1);
  int mu2 = covering_index(inst.m2);
  out.swapped = mu1 > mu2;
  const CommonInstance oriented =
      out.swapped ? CommonInstance(inst.m2, inst.m1, inst.k) : inst;
  if (out.swapped) std::swap(mu1, mu2);
  out.mu1 = mu1;
  out.mu2 = mu2;
  if (mu2 >= inst.k) {
    throw PreconditionError("μ*_2 = " + std::to_string(mu2) + " is not < k = " +
                            std::to_string(inst.k));
  }
  out.window = auto_window(inst.size(), inst.k);
  const int blocks = inst.k - mu2 - 1;
  ElementSet residual = inst.all();
  for (int ell = 0; ell < blocks; ++ell) {
    // While ℓ < k − μ*_2 − 1 the remainder condition holds for every X, so
    // the step family is just the common independent sets.
    for (const Matroid* m : {&oriented.m1, &oriented.m2}) {
      if (!is_in_union(*m, inst.k - ell - 1, residual)) {
        throw std::logic_error("empty set left the step family");
      }
    }
    const Window step =
        step_window(out.window, residual.size(), inst.k - ell);
    const auto block = four_polyhedra_integral_point(oriented, residual, ell, step);
    if (!block) throw StepFailure(residual, ell, step.lo, step.hi);
    out.subpartition.blocks.push_back(*block);
    residual = residual - *block;
  }
  out.remainder = residual;
  return out;
}

std::vector<ProbeStep> probe_common(const CommonInstance& inst,
                                    std::optional<Window> window) {
  require_cover(inst);
  const Window w = window.value_or(auto_window(inst.size(), inst.k));
  std::vector<ProbeStep> steps;
  ElementSet residual = inst.all();
  for (int ell = 0; ell < inst.k; ++ell) {
    ProbeStep step;
    step.residual = residual;
    step.ell = ell;
    step.window = step_window(w, residual.size(), inst.k - ell);
    if (step.window.lo > step.window.hi) {  // Only with a too narrow window.
      steps.push_back(step);
      break;
    }
    const FourPolyhedra four = four_polyhedra(inst, residual, ell, step.window);
    const RationalPoint uniform =
        RationalPoint::constant(residual.size(), Rational(1, inst.k - ell));
    step.uniform_member = membership(uniform, four.description).member;
    step.integral_point =
        four_polyhedra_integral_point(inst, residual, ell, step.window);
    steps.push_back(step);
    if (!step.integral_point) break;
    residual = residual - *step.integral_point;
  }
  return steps;
}

}  // namespace unipart
