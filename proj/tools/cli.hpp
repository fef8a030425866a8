// Copyright 2026 The nogo Authors
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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nogo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Malformed input; the message carries its position ("file:line:col: ...").
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Runs one subcommand. `args` excludes the program name. The report goes
/// to `out` and diagnostics to `err`; the return value is the exit code.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

}  // namespace nogo::cli
