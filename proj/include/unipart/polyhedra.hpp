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
#include <variant>
#include <vector>

#include "unipart/matroid.hpp"
#include "unipart/set_function.hpp"

namespace unipart {

/// Per-coordinate bound; nullopt is ±∞.
using BoundVector = std::vector<std::optional<Rational>>;

BoundVector finite_bounds(const RationalPoint& p);
BoundVector unbounded(int n);

/// x(X) ≤ f(X) for all X: P(f).
struct UpperConstraint {
  SetFunction f;
};
/// x(X) ≥ g(X) for all X: P(g).
struct LowerConstraint {
  SetFunction g;
};
/// x ∈ P(h) and x(E) = h(E): B(h). The direction follows h's modularity tag.
struct BaseConstraint {
  SetFunction h;
};
/// l ≤ x ≤ u.
struct BoxConstraint {
  BoundVector lower;
  BoundVector upper;
};
/// lo ≤ x(E) ≤ hi.
struct SumWindow {
  Rational lo;
  Rational hi;
};

using Constraint = std::variant<UpperConstraint, LowerConstraint,
                                BaseConstraint, BoxConstraint, SumWindow>;

/// An intersection of constraint families over one ground set.
class PolyhedronDescription {
 public:
  explicit PolyhedronDescription(int n) : n_(n) {}

  int size() const { return n_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  /// Throws std::invalid_argument when a set function has another ground set.
  PolyhedronDescription& add(Constraint c);
  /// Conjunction of both descriptions.
  PolyhedronDescription& intersect(const PolyhedronDescription& other);

 private:
  int n_;
  std::vector<Constraint> constraints_;
};

PolyhedronDescription submodular_polyhedron(const SetFunction& f);
PolyhedronDescription supermodular_polyhedron(const SetFunction& g);
PolyhedronDescription base_polyhedron(const SetFunction& h);
/// [0,1]^E.
PolyhedronDescription unit_cube(int n);

struct Violation {
  std::size_t constraint = 0;
  /// The violated subset; for box constraints the offending coordinate
  /// as a singleton, for windows E.
  ElementSet set;
  Rational value;
  Rational bound;
  /// "<=", ">=" or "==".
  std::string relation;

  std::string to_string() const;
};

struct Membership {
  bool member = true;
  std::optional<Violation> violation;

  explicit operator bool() const { return member; }
};

/// Exact check of every constraint over all subsets. The certificate is the
/// first violation in constraint order, subsets in colex (mask) order.
/// Throws std::invalid_argument on dimension mismatch.
Membership membership(const RationalPoint& x, const PolyhedronDescription& d);

/// membership(χ_X, d) without materializing rationals for x.
bool contains_indicator(const PolyhedronDescription& d, ElementSet x);

/// f#(X) = f(E) − f(E∖X). Flips the modularity tag; an involution.
SetFunction dual_supermodular(const SetFunction& f);

/// f(X) − g(Y) ≥ f(X∖Y) − g(Y∖X) for all X, Y.
bool is_gpolymatroid_pair(const SetFunction& f, const SetFunction& g);

enum class TruncationMode { kSubmodular, kSupermodular };

/// Changes only the value at E: minus alpha (submodular mode) or plus alpha
/// (supermodular mode). The result keeps its tag when it still satisfies the
/// defining inequalities, else it is tagged kUnknown.
SetFunction truncate(const SetFunction& h, const Rational& alpha,
                     TruncationMode mode);

/// P(h), upper or lower per h's tag, intersected with the box [l, u].
/// Throws std::invalid_argument when l(e) > u(e) somewhere.
PolyhedronDescription bound_function(const SetFunction& h,
                                     const BoundVector& lower,
                                     const BoundVector& upper);

/// f^u(X) = min over Y ⊆ X of f(Y) + u(X∖Y); P(f^u) = {x ∈ P(f) : x ≤ u}.
SetFunction tighten_upper(const SetFunction& f, const BoundVector& upper);
/// g_l(X) = max over Y ⊆ X of g(Y) + l(X∖Y); P(g_l) = {x ∈ P(g) : x ≥ l}.
SetFunction tighten_lower(const SetFunction& g, const BoundVector& lower);

/// d with lo ≤ x(E) ≤ hi added. Throws std::invalid_argument if lo > hi.
PolyhedronDescription window(PolyhedronDescription d, const Rational& lo,
                             const Rational& hi);

/// Submodular f̂ on E ∪ {ê}, ê = element n: f̂(X) = f(X) if ê ∉ X,
/// t − g(Ê∖X) if ê ∈ X (so f̂(Ê) = t). The projection of B(f̂) along ê is
/// Q(f, g) for every t. Throws std::invalid_argument unless (f, g) is a
/// g-polymatroid pair.
SetFunction lift_gpolymatroid(const SetFunction& f, const SetFunction& g,
                              const Rational& t);

/// The unique point of B(f̂) above x: (x, t − x(E)).
RationalPoint lift_point(const RationalPoint& x, const Rational& t);

enum class MatroidFunctionKind {
  kRank,            ///< ρ, submodular
  kSpanningDual,    ///< ρ#(X) = ρ(E) − ρ(E∖X), supermodular
  kCospanningDual,  ///< (ρ*)#(X) = |X| − ρ(X), supermodular
};

SetFunction matroid_set_function(const Matroid& m, MatroidFunctionKind kind);

/// The same three functions built from the union rank ρ^k.
SetFunction union_set_function(const Matroid& m, int k,
                               MatroidFunctionKind kind);

/// Which supermodular lower bound the removal polyhedron uses.
enum class RemovalBound {
  /// |X| − ρ^{k−1}(X): χ_X satisfies it iff E∖X ∈ I^{k−1}.
  kCospanning,
  /// (ρ^{k−1})#: χ_X satisfies it iff X spans M^{k−1}. Kept for comparison;
  /// it does not characterize the removal family (see K4, k = 2).
  kSpanning,
};

/// P(ρ) ∩ P(g) for the removal family of k copies, g per `bound`.
PolyhedronDescription removal_polyhedron(
    const Matroid& m, int k, RemovalBound bound = RemovalBound::kCospanning);
/// Same, from a matroid rank table over n elements (n may be 0).
PolyhedronDescription removal_polyhedron(
    const std::vector<int>& ranks, int n, int k,
    RemovalBound bound = RemovalBound::kCospanning);

}  // namespace unipart
