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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cli.hpp"
#include "nogo/gadget.hpp"
#include "nogo/stabilizer_code.hpp"

namespace nogo::cli {

/// Rows of '0'/'1'; blank lines and lines starting with '#' are skipped.
BitMatrix read_matrix_file(const std::string &path);

/// One Pauli string per line, '#' comments, optional `name=`, `d=` and
/// `n=` headers (`n=` is only needed for a code without generators).
StabilizerCode read_code_file(const std::string &path);

/// {"matrix": [...]} or {"automorphism": {"perm": "(1 2)", "locals": [...]}}.
/// The matrix form may be non-symplectic; callers check.
struct GadgetFile {
    BitMatrix raw;
    std::optional<Automorphism> automorphism;
};
GadgetFile read_gadget_file(const std::string &path);

/// "2,1,1" -> {2, 1, 1}; `what` names the option in error messages.
std::vector<uint64_t> parse_csv(std::string_view text, std::string_view what);

/// "1,2/3,4" with 1-based qubits.
Partition parse_partition(std::string_view text, size_t n);

/// "1-2,3-4": 1-based transposition pairs; unlisted qubits are fixed.
ZXDuality parse_tau(std::string_view text, size_t n);
std::string tau_to_string(const ZXDuality &tau);

}  // namespace nogo::cli
