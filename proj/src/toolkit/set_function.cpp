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

#include "unipart/set_function.hpp"

#include <stdexcept>

namespace unipart {

std::string to_string(Modularity m) {
  switch (m) {
    case Modularity::kSubmodular:
      return "submodular";
    case Modularity::kSupermodular:
      return "supermodular";
    case Modularity::kUnknown:
      return "unknown";
  }
  return "unknown";
}

SetFunction::SetFunction(int n, std::vector<Rational> table, Modularity tag)
    : n_(n), table_(std::move(table)), tag_(tag) {
  if (n < 0 || n > kSetFunctionCap) {
    throw std::invalid_argument("set functions support n in [0, 20], got " +
                                std::to_string(n));
  }
  if (table_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("set function table must have 2^n entries");
  }
  if (table_[0] != 0) {
    throw std::invalid_argument("set function must vanish on the empty set");
  }
  const Rational limit(std::int64_t{1} << 62);
  integral_ = true;
  for (const Rational& v : table_) {
    if (boost::multiprecision::denominator(v) != 1 || abs(v) > limit) {
      integral_ = false;
      break;
    }
  }
  if (integral_) {
    int_table_.reserve(table_.size());
    for (const Rational& v : table_) {
      int_table_.push_back(
          static_cast<std::int64_t>(boost::multiprecision::numerator(v)));
    }
  }
}

SetFunction SetFunction::zero(int n, Modularity tag) {
  if (n < 0 || n > kSetFunctionCap) {
    throw std::invalid_argument("set functions support n in [0, 20]");
  }
  return SetFunction(n, std::vector<Rational>(std::size_t{1} << n), tag);
}

SetFunction SetFunction::from_ints(int n, const std::vector<int>& table,
                                   Modularity tag) {
  return SetFunction(n, std::vector<Rational>(table.begin(), table.end()), tag);
}

SetFunction SetFunction::from_callable(
    int n, const std::function<Rational(ElementSet)>& fn, Modularity tag) {
  if (n < 0 || n > kSetFunctionCap) {
    throw std::invalid_argument("set functions support n in [0, 20]");
  }
  std::vector<Rational> table(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < table.size(); ++x) table[x] = fn(ElementSet(x));
  return SetFunction(n, std::move(table), tag);
}

SetFunction SetFunction::with_modularity(Modularity tag) const {
  SetFunction out = *this;
  out.tag_ = tag;
  return out;
}

namespace {

// Local form: f(X+e) + f(X+e') vs f(X) + f(X+e+e'); equivalent to the
// all-pairs inequality.
template <typename Cmp>
bool local_pairs_hold(int n, const std::vector<Rational>& t, Cmp holds) {
  for (std::uint64_t x = 0; x < t.size(); ++x) {
    for (int e = 0; e < n; ++e) {
      const std::uint64_t a = std::uint64_t{1} << e;
      if (x & a) continue;
      for (int f = e + 1; f < n; ++f) {
        const std::uint64_t b = std::uint64_t{1} << f;
        if (x & b) continue;
        if (!holds(t[x | a] + t[x | b], t[x] + t[x | a | b])) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool SetFunction::is_submodular() const {
  return local_pairs_hold(n_, table_, [](const Rational& split,
                                         const Rational& joined) {
    return split >= joined;
  });
}

bool SetFunction::is_supermodular() const {
  return local_pairs_hold(n_, table_, [](const Rational& split,
                                         const Rational& joined) {
    return split <= joined;
  });
}

RationalPoint RationalPoint::constant(int n, const Rational& value) {
  return RationalPoint(std::vector<Rational>(n, value));
}

RationalPoint RationalPoint::indicator(int n, ElementSet x) {
  std::vector<Rational> coords(n);
  for (int e : x.elements()) coords.at(e) = 1;
  return RationalPoint(std::move(coords));
}

Rational RationalPoint::sum(ElementSet x) const {
  Rational total = 0;
  for (int e : x.elements()) total += coords_.at(e);
  return total;
}

std::vector<Rational> RationalPoint::subset_sums() const {
  std::vector<Rational> sums(std::size_t{1} << coords_.size());
  for (std::uint64_t x = 1; x < sums.size(); ++x) {
    const std::uint64_t low = x & (~x + 1);
    sums[x] = sums[x & ~low] + coords_[std::countr_zero(low)];
  }
  return sums;
}

std::string RationalPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += coords_[i].str();
  }
  return out + ")";
}

}  // namespace unipart
