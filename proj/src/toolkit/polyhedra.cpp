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

#include "unipart/polyhedra.hpp"

#include <iostream>
#include <stdexcept>

#include "unipart/union_matroid.hpp"

namespace unipart {

BoundVector finite_bounds(const RationalPoint& p) {
  return BoundVector(p.coords().begin(), p.coords().end());
}

BoundVector unbounded(int n) { return BoundVector(n); }

namespace {

void require_same_ground(int n, const SetFunction& f) {
  if (f.size() != n) {
    throw std::invalid_argument("set function on " + std::to_string(f.size()) +
                                " elements used in a polyhedron over " +
                                std::to_string(n));
  }
}

bool upper_direction(const SetFunction& h) {
  switch (h.modularity()) {
    case Modularity::kSubmodular:
      return true;
    case Modularity::kSupermodular:
      return false;
    case Modularity::kUnknown:
      break;
  }
  throw std::invalid_argument(
      "base/bound constraints need a submodular or supermodular function");
}

}  // namespace

PolyhedronDescription& PolyhedronDescription::add(Constraint c) {
  std::visit(
      [&](const auto& con) {
        using T = std::decay_t<decltype(con)>;
        if constexpr (std::is_same_v<T, UpperConstraint>) {
          require_same_ground(n_, con.f);
        } else if constexpr (std::is_same_v<T, LowerConstraint>) {
          require_same_ground(n_, con.g);
        } else if constexpr (std::is_same_v<T, BaseConstraint>) {
          require_same_ground(n_, con.h);
          upper_direction(con.h);
        } else if constexpr (std::is_same_v<T, BoxConstraint>) {
          if (static_cast<int>(con.lower.size()) != n_ ||
              static_cast<int>(con.upper.size()) != n_) {
            throw std::invalid_argument("box bounds have the wrong dimension");
          }
        } else {
          if (con.lo > con.hi) {
            throw std::invalid_argument("sum window with lo > hi");
          }
        }
      },
      c);
  constraints_.push_back(std::move(c));
  return *this;
}

PolyhedronDescription& PolyhedronDescription::intersect(
    const PolyhedronDescription& other) {
  if (other.n_ != n_) throw std::invalid_argument("dimension mismatch");
  for (const Constraint& c : other.constraints_) add(c);
  return *this;
}

PolyhedronDescription submodular_polyhedron(const SetFunction& f) {
  return std::move(PolyhedronDescription(f.size()).add(UpperConstraint{f}));
}

PolyhedronDescription supermodular_polyhedron(const SetFunction& g) {
  return std::move(PolyhedronDescription(g.size()).add(LowerConstraint{g}));
}

PolyhedronDescription base_polyhedron(const SetFunction& h) {
  return std::move(PolyhedronDescription(h.size()).add(BaseConstraint{h}));
}

PolyhedronDescription unit_cube(int n) {
  return std::move(PolyhedronDescription(n).add(BoxConstraint{
      BoundVector(n, Rational(0)), BoundVector(n, Rational(1))}));
}

std::string Violation::to_string() const {
  return "constraint " + std::to_string(constraint) + ": x(" +
         set.to_string() + ")=" + value.str() + " violates " + relation + " " +
         bound.str();
}

namespace {

// Shared evaluation loop over a table of subset sums `sums[X] = x(X)`.
template <typename SumFn, typename CoordFn>
Membership check_all(const PolyhedronDescription& d, int n, SumFn sum_of,
                     CoordFn coord) {
  const std::uint64_t count = std::uint64_t{1} << n;
  const ElementSet all = ElementSet::full(n);
  for (std::size_t ci = 0; ci < d.constraints().size(); ++ci) {
    const Constraint& c = d.constraints()[ci];
    std::optional<Violation> v;
    std::visit(
        [&](const auto& con) {
          using T = std::decay_t<decltype(con)>;
          auto fail = [&](ElementSet s, Rational value, Rational bound,
                          const char* rel) {
            v = Violation{ci, s, std::move(value), std::move(bound), rel};
          };
          if constexpr (std::is_same_v<T, UpperConstraint> ||
                        std::is_same_v<T, LowerConstraint> ||
                        std::is_same_v<T, BaseConstraint>) {
            const SetFunction* h;
            bool upper;
            if constexpr (std::is_same_v<T, UpperConstraint>) {
              h = &con.f;
              upper = true;
            } else if constexpr (std::is_same_v<T, LowerConstraint>) {
              h = &con.g;
              upper = false;
            } else {
              h = &con.h;
              upper = upper_direction(con.h);
            }
            for (std::uint64_t mask = 0; mask < count; ++mask) {
              const ElementSet s(mask);
              const Rational value = sum_of(s);
              const Rational& bound = (*h)(s);
              if (upper ? value > bound : value < bound) {
                fail(s, value, bound, upper ? "<=" : ">=");
                return;
              }
            }
            if constexpr (std::is_same_v<T, BaseConstraint>) {
              const Rational value = sum_of(all);
              if (value != (*h)(all)) fail(all, value, (*h)(all), "==");
            }
          } else if constexpr (std::is_same_v<T, BoxConstraint>) {
            for (int e = 0; e < n; ++e) {
              const Rational value = coord(e);
              if (con.lower[e] && value < *con.lower[e]) {
                fail(ElementSet::singleton(e), value, *con.lower[e], ">=");
                return;
              }
              if (con.upper[e] && value > *con.upper[e]) {
                fail(ElementSet::singleton(e), value, *con.upper[e], "<=");
                return;
              }
            }
          } else {
            const Rational value = sum_of(all);
            if (value < con.lo) {
              fail(all, value, con.lo, ">=");
            } else if (value > con.hi) {
              fail(all, value, con.hi, "<=");
            }
          }
        },
        c);
    if (v) return Membership{false, std::move(v)};
  }
  return Membership{};
}

}  // namespace

Membership membership(const RationalPoint& x, const PolyhedronDescription& d) {
  if (x.size() != d.size()) {
    throw std::invalid_argument("point of dimension " +
                                std::to_string(x.size()) +
                                " tested against a polyhedron in dimension " +
                                std::to_string(d.size()));
  }
  const std::vector<Rational> sums = x.subset_sums();
  return check_all(
      d, d.size(), [&](ElementSet s) { return sums[s.bits()]; },
      [&](int e) { return x[e]; });
}

bool contains_indicator(const PolyhedronDescription& d, ElementSet x) {
  const int n = d.size();
  if (!x.subset_of(ElementSet::full(n))) {
    throw std::invalid_argument("indicator set leaves the ground set");
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  auto rational_bound_holds = [&](const SetFunction& h, bool upper) {
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      const Rational value((ElementSet(mask) & x).size());
      if (upper ? value > h(ElementSet(mask)) : value < h(ElementSet(mask))) {
        return false;
      }
    }
    return true;
  };
  auto bound_holds = [&](const SetFunction& h, bool upper) {
    const std::vector<std::int64_t>* table = h.integer_table();
    if (table == nullptr) return rational_bound_holds(h, upper);
    const std::uint64_t bits = x.bits();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      const std::int64_t value = std::popcount(mask & bits);
      if (upper ? value > (*table)[mask] : value < (*table)[mask]) return false;
    }
    return true;
  };
  const Rational size(x.size());
  for (const Constraint& c : d.constraints()) {
    const bool holds = std::visit(
        [&](const auto& con) -> bool {
          using T = std::decay_t<decltype(con)>;
          if constexpr (std::is_same_v<T, UpperConstraint>) {
            return bound_holds(con.f, true);
          } else if constexpr (std::is_same_v<T, LowerConstraint>) {
            return bound_holds(con.g, false);
          } else if constexpr (std::is_same_v<T, BaseConstraint>) {
            return bound_holds(con.h, upper_direction(con.h)) &&
                   size == con.h(ElementSet::full(n));
          } else if constexpr (std::is_same_v<T, BoxConstraint>) {
            for (int e = 0; e < n; ++e) {
              const Rational value(x.contains(e) ? 1 : 0);
              if (con.lower[e] && value < *con.lower[e]) return false;
              if (con.upper[e] && value > *con.upper[e]) return false;
            }
            return true;
          } else {
            return con.lo <= size && size <= con.hi;
          }
        },
        c);
    if (!holds) return false;
  }
  return true;
}

SetFunction dual_supermodular(const SetFunction& f) {
  const ElementSet all = f.ground();
  const Rational& total = f(all);
  Modularity tag = Modularity::kUnknown;
  if (f.modularity() == Modularity::kSubmodular) tag = Modularity::kSupermodular;
  if (f.modularity() == Modularity::kSupermodular) tag = Modularity::kSubmodular;
  return SetFunction::from_callable(
      f.size(), [&](ElementSet x) { return total - f(all - x); }, tag);
}

bool is_gpolymatroid_pair(const SetFunction& f, const SetFunction& g) {
  if (f.size() != g.size()) {
    throw std::invalid_argument("g-polymatroid pair over different grounds");
  }
  const std::uint64_t count = std::uint64_t{1} << f.size();
  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::uint64_t y = 0; y < count; ++y) {
      const ElementSet xs(x), ys(y);
      if (f(xs) - g(ys) < f(xs - ys) - g(ys - xs)) return false;
    }
  }
  return true;
}

SetFunction truncate(const SetFunction& h, const Rational& alpha,
                     TruncationMode mode) {
  if (alpha < 0) throw std::invalid_argument("truncation amount must be >= 0");
  if (h.size() == 0 && alpha != 0) {
    throw std::invalid_argument("cannot truncate a function on the empty set");
  }
  std::vector<Rational> table = h.table();
  const std::size_t top = table.size() - 1;
  if (mode == TruncationMode::kSubmodular) {
    table[top] -= alpha;
  } else {
    table[top] += alpha;
  }
  SetFunction out(h.size(), std::move(table), h.modularity());
  const bool holds = h.modularity() == Modularity::kSubmodular
                         ? out.is_submodular()
                     : h.modularity() == Modularity::kSupermodular
                         ? out.is_supermodular()
                         : false;
  if (!holds && h.modularity() != Modularity::kUnknown) {
    std::cerr << "warning: truncation by " << alpha.str() << " breaks "
              << to_string(h.modularity()) << "ity; tagging unknown\n";
    return out.with_modularity(Modularity::kUnknown);
  }
  return out;
}

namespace {

void check_bounds(const BoundVector& lower, const BoundVector& upper) {
  for (std::size_t e = 0; e < lower.size(); ++e) {
    if (lower[e] && upper[e] && *lower[e] > *upper[e]) {
      throw std::invalid_argument("lower bound " + lower[e]->str() +
                                  " exceeds upper bound " + upper[e]->str() +
                                  " at coordinate " + std::to_string(e));
    }
  }
}

}  // namespace

PolyhedronDescription bound_function(const SetFunction& h,
                                     const BoundVector& lower,
                                     const BoundVector& upper) {
  const int n = h.size();
  if (static_cast<int>(lower.size()) != n ||
      static_cast<int>(upper.size()) != n) {
    throw std::invalid_argument("bound vectors have the wrong dimension");
  }
  check_bounds(lower, upper);
  PolyhedronDescription d(n);
  if (upper_direction(h)) {
    d.add(UpperConstraint{h});
  } else {
    d.add(LowerConstraint{h});
  }
  d.add(BoxConstraint{lower, upper});
  return d;
}

namespace {

// best(X) over Y ⊆ X of h(Y) + b(X∖Y), skipping splits through infinite
// bounds. `better(a, b)` picks the preferred value.
template <typename Better>
SetFunction tighten(const SetFunction& h, const BoundVector& bound,
                    Better better) {
  const int n = h.size();
  if (static_cast<int>(bound.size()) != n) {
    throw std::invalid_argument("bound vector has the wrong dimension");
  }
  ElementSet finite;
  for (int e = 0; e < n; ++e) {
    if (bound[e]) finite.insert(e);
  }
  std::vector<Rational> table(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    const ElementSet x(mask);
    std::optional<Rational> best;
    // X∖Y must consist of finitely bounded coordinates.
    for_each_subset(x & finite, [&](ElementSet moved) {
      Rational value = h(x - moved);
      for (int e : moved.elements()) value += *bound[e];
      if (!best || better(value, *best)) best = std::move(value);
    });
    table[mask] = *best;
  }
  return SetFunction(n, std::move(table), h.modularity());
}

}  // namespace

SetFunction tighten_upper(const SetFunction& f, const BoundVector& upper) {
  return tighten(f, upper,
                 [](const Rational& a, const Rational& b) { return a < b; });
}

SetFunction tighten_lower(const SetFunction& g, const BoundVector& lower) {
  return tighten(g, lower,
                 [](const Rational& a, const Rational& b) { return a > b; });
}

PolyhedronDescription window(PolyhedronDescription d, const Rational& lo,
                             const Rational& hi) {
  if (lo > hi) {
    throw std::invalid_argument("window lower end " + lo.str() +
                                " exceeds upper end " + hi.str());
  }
  d.add(SumWindow{lo, hi});
  return d;
}

SetFunction lift_gpolymatroid(const SetFunction& f, const SetFunction& g,
                              const Rational& t) {
  if (!is_gpolymatroid_pair(f, g)) {
    throw std::invalid_argument("(f, g) is not a g-polymatroid pair");
  }
  const int n = f.size();
  if (n + 1 > kSetFunctionCap) {
    throw std::invalid_argument("lift exceeds the set-function size cap");
  }
  const ElementSet base = ElementSet::full(n);
  const ElementSet lifted_all = ElementSet::full(n + 1);
  return SetFunction::from_callable(
      n + 1,
      [&](ElementSet x) -> Rational {
        if (!x.contains(n)) return f(x);
        return t - g(base & (lifted_all - x));
      },
      Modularity::kSubmodular);
}

RationalPoint lift_point(const RationalPoint& x, const Rational& t) {
  std::vector<Rational> coords = x.coords();
  coords.push_back(t - x.sum(ElementSet::full(x.size())));
  return RationalPoint(std::move(coords));
}

namespace {

SetFunction from_rank_values(int n, const std::vector<int>& ranks,
                             MatroidFunctionKind kind) {
  const std::uint64_t all = ElementSet::full(n).bits();
  switch (kind) {
    case MatroidFunctionKind::kRank:
      return SetFunction::from_ints(n, ranks, Modularity::kSubmodular);
    case MatroidFunctionKind::kSpanningDual:
      return SetFunction::from_callable(
          n,
          [&](ElementSet x) {
            return Rational(ranks[all] - ranks[all & ~x.bits()]);
          },
          Modularity::kSupermodular);
    case MatroidFunctionKind::kCospanningDual:
      return SetFunction::from_callable(
          n, [&](ElementSet x) { return Rational(x.size() - ranks[x.bits()]); },
          Modularity::kSupermodular);
  }
  throw std::logic_error("unknown matroid function kind");
}

void require_cap(const Matroid& m) {
  if (m.size() > kSetFunctionCap) {
    throw std::invalid_argument("set functions support n <= 20");
  }
}

}  // namespace

SetFunction matroid_set_function(const Matroid& m, MatroidFunctionKind kind) {
  require_cap(m);
  return from_rank_values(m.size(), rank_table(m), kind);
}

SetFunction union_set_function(const Matroid& m, int k,
                               MatroidFunctionKind kind) {
  require_cap(m);
  const UnionRankTable table(m, k);
  return from_rank_values(m.size(), table.values(), kind);
}

PolyhedronDescription removal_polyhedron(const Matroid& m, int k,
                                         RemovalBound bound) {
  require_cap(m);
  return removal_polyhedron(rank_table(m), m.size(), k, bound);
}

PolyhedronDescription removal_polyhedron(const std::vector<int>& ranks, int n,
                                         int k, RemovalBound bound) {
  if (k < 1) throw std::invalid_argument("removal polyhedron needs k >= 1");
  PolyhedronDescription d = submodular_polyhedron(
      from_rank_values(n, ranks, MatroidFunctionKind::kRank));
  const MatroidFunctionKind kind = bound == RemovalBound::kCospanning
                                       ? MatroidFunctionKind::kCospanningDual
                                       : MatroidFunctionKind::kSpanningDual;
  const UnionRankTable remainder(ranks, n, k - 1);
  d.add(LowerConstraint{from_rank_values(n, remainder.values(), kind)});
  return d;
}

}  // namespace unipart
