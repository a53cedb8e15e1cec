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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unipart/element_set.hpp"

namespace unipart {

using Rational = boost::multiprecision::cpp_rational;

/// Hard cap on the ground-set size of table-backed set functions.
inline constexpr int kSetFunctionCap = 20;

enum class Modularity { kSubmodular, kSupermodular, kUnknown };

std::string to_string(Modularity m);

/// A real-valued function on all 2^n subsets of {0, ..., n-1}, stored as an
/// exact table indexed by mask, with f(∅) = 0.
class SetFunction {
 public:
  SetFunction(int n, std::vector<Rational> table, Modularity tag);

  static SetFunction zero(int n, Modularity tag);
  static SetFunction from_ints(int n, const std::vector<int>& table,
                               Modularity tag);
  static SetFunction from_callable(int n,
                                   const std::function<Rational(ElementSet)>& fn,
                                   Modularity tag);

  int size() const { return n_; }
  ElementSet ground() const { return ElementSet::full(n_); }
  Modularity modularity() const { return tag_; }
  const Rational& operator()(ElementSet x) const { return table_[x.bits()]; }
  const std::vector<Rational>& table() const { return table_; }
  /// The table as integers when every value is one, else nullptr.
  const std::vector<std::int64_t>* integer_table() const {
    return integral_ ? &int_table_ : nullptr;
  }

  SetFunction with_modularity(Modularity tag) const;

  bool is_submodular() const;
  bool is_supermodular() const;

  friend bool operator==(const SetFunction& a, const SetFunction& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  int n_;
  std::vector<Rational> table_;
  Modularity tag_;
  bool integral_ = false;
  std::vector<std::int64_t> int_table_;
};

/// A point of R^E with exact coordinates.
class RationalPoint {
 public:
  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> coords)
      : coords_(std::move(coords)) {}
  static RationalPoint constant(int n, const Rational& value);
  /// Characteristic vector of x in R^n.
  static RationalPoint indicator(int n, ElementSet x);

  int size() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int e) const { return coords_[e]; }
  Rational& operator[](int e) { return coords_[e]; }
  const std::vector<Rational>& coords() const { return coords_; }

  /// x(X) = Σ_{e ∈ X} x(e).
  Rational sum(ElementSet x) const;
  /// x(X) for every mask X, built incrementally.
  std::vector<Rational> subset_sums() const;

  std::string to_string() const;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

 private:
  std::vector<Rational> coords_;
};

}  // namespace unipart
