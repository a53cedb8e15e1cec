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
#include <stdexcept>
#include <string>

#include "unipart/element_set.hpp"

namespace unipart {

/// Malformed instance or matroid description.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition of an operation does not hold for the input.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The set to be covered is not in the union matroid I^k (or a requested
/// cardinality window cannot be met). When available, `certificate` is a
/// set Y with |X \ Y| + k·rank(Y) < |X|.
class InfeasibleError : public PreconditionError {
 public:
  InfeasibleError(const std::string& what,
                  std::optional<ElementSet> certificate = std::nullopt)
      : PreconditionError(what), certificate_(certificate) {}

  const std::optional<ElementSet>& certificate() const { return certificate_; }

 private:
  std::optional<ElementSet> certificate_;
};

/// The polyhedral two-matroid strategy found no integral point at step `ell`
/// with current residual ground set `residual`.
class StepFailure : public std::runtime_error {
 public:
  StepFailure(ElementSet residual, int ell, int window_lo, int window_hi)
      : std::runtime_error("no integral point in the step-" +
                           std::to_string(ell) + " polyhedra over F=" +
                           residual.to_string()),
        residual_(residual),
        ell_(ell),
        window_lo_(window_lo),
        window_hi_(window_hi) {}

  ElementSet residual() const { return residual_; }
  int ell() const { return ell_; }
  int window_lo() const { return window_lo_; }
  int window_hi() const { return window_hi_; }

 private:
  ElementSet residual_;
  int ell_;
  int window_lo_;
  int window_hi_;
};

}  // namespace unipart
