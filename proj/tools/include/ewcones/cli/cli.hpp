// Copyright 2026 The ewcones Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EWCONES_CLI_CLI_HPP_
#define EWCONES_CLI_CLI_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ewcones::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitIo = 4;

/// Process environment seen by the tool, injected for testability.
struct Environment {
  /// Value of EWCONES_SEED, if set.
  std::optional<std::string> seed;
};

/// Runs one invocation. `args` excludes the program name. Records go to
/// `out`, diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

/// Version string embedded in every record.
const char* tool_version();

}  // namespace ewcones::cli

#endif  // EWCONES_CLI_CLI_HPP_
