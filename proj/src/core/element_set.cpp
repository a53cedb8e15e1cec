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

#include "unipart/element_set.hpp"

#include <stdexcept>

namespace unipart {

ElementSet::ElementSet(std::initializer_list<int> elements)
    : ElementSet(from_elements(std::span<const int>(elements.begin(),
                                                    elements.size()))) {}

ElementSet ElementSet::from_elements(std::span<const int> elements) {
  ElementSet out;
  for (int e : elements) {
    if (e < 0 || e >= kMaxElements) {
      throw std::out_of_range("element index " + std::to_string(e) +
                              " outside [0, 64)");
    }
    if (out.contains(e)) {
      throw std::invalid_argument("duplicate element " + std::to_string(e));
    }
    out.insert(e);
  }
  return out;
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

ElementSet deposit(ElementSet local, ElementSet support) {
  std::uint64_t out = 0;
  int i = 0;
  for (std::uint64_t rest = support.bits(); rest != 0; rest &= rest - 1, ++i) {
    if (local.contains(i)) out |= rest & (~rest + 1);
  }
  return ElementSet(out);
}

ElementSet extract(ElementSet global, ElementSet support) {
  std::uint64_t out = 0;
  int i = 0;
  for (std::uint64_t rest = support.bits(); rest != 0; rest &= rest - 1, ++i) {
    if (global.contains(std::countr_zero(rest))) out |= std::uint64_t{1} << i;
  }
  return ElementSet(out);
}

}  // namespace unipart
