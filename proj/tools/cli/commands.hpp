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

#include <iosfwd>

namespace unipart::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  /// verify / selftest found a violated property.
  kCheckFailed = 1,
  kParseError = 2,
  kPrecondition = 3,
  kStepFailure = 4,
  kInternal = 70,
};

/// Parses argv, runs one subcommand, writes results to `out` and diagnostics
/// to `err`, and returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace unipart::cli
