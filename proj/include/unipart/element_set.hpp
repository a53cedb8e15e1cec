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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace unipart {

/// Largest ground set a matroid may have; elements are bits of a 64-bit mask.
inline constexpr int kMaxElements = 64;

/// A subset of a ground set {0, ..., n-1}, stored as a bitmask.
///
/// The numeric order of the masks is the colex order of the subsets, which is
/// the canonical enumeration order used throughout the library.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<int> elements);

  static ElementSet from_elements(std::span<const int> elements);
  /// The set {0, ..., n-1}.
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet singleton(int e) {
    return ElementSet(std::uint64_t{1} << e);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  /// Highest element index plus one, 0 for the empty set.
  constexpr int span_width() const { return 64 - std::countl_zero(bits_); }

  ElementSet& insert(int e) {
    bits_ |= std::uint64_t{1} << e;
    return *this;
  }
  ElementSet& erase(int e) {
    bits_ &= ~(std::uint64_t{1} << e);
    return *this;
  }
  constexpr ElementSet with(int e) const {
    return ElementSet(bits_ | (std::uint64_t{1} << e));
  }
  constexpr ElementSet without(int e) const {
    return ElementSet(bits_ & ~(std::uint64_t{1} << e));
  }

  std::vector<int> elements() const;
  /// "{0,3}" style rendering.
  std::string to_string() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Maps a set over the local indices 0..|support|-1 onto the elements of
/// `support` (the i-th local index goes to the i-th smallest element).
ElementSet deposit(ElementSet local, ElementSet support);

/// Inverse of deposit: re-indexes `global ∩ support` to local indices.
ElementSet extract(ElementSet global, ElementSet support);

/// Calls fn(subset) for every subset of `set`, in increasing mask order.
template <typename Fn>
void for_each_subset(ElementSet set, Fn&& fn) {
  const std::uint64_t mask = set.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(ElementSet(sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

}  // namespace unipart
