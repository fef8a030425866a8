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

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nogo/bitmatrix.hpp"
#include "nogo/pauli.hpp"
#include "nogo/symplectic.hpp"

namespace nogo {

/// Why a generator matrix is not a valid stabilizer code.
class CodeValidationError : public std::invalid_argument {
   public:
    enum class Kind { OddColumnCount, Anticommuting, DependentRow, TooManyRows };

    CodeValidationError(Kind kind, std::string message, size_t row_a = 0, size_t row_b = 0)
        : std::invalid_argument(std::move(message)), kind_(kind), row_a_(row_a), row_b_(row_b) {}

    Kind kind() const noexcept { return kind_; }
    /// 0-based rows involved: the anticommuting pair, or the dependent row in row_a.
    size_t row_a() const noexcept { return row_a_; }
    size_t row_b() const noexcept { return row_b_; }

   private:
    Kind kind_;
    size_t row_a_;
    size_t row_b_;
};

/// Standard form plus a full symplectic completion.
///
/// `standard` is expressed in the permuted qubit frame where the block
/// structure is visible; every other matrix is in the original qubit frame.
struct StandardFormCode {
    size_t num_qubits = 0;
    size_t num_logical = 0;
    /// Rank of the X block (the size r of the leading identity).
    size_t x_rank = 0;
    /// qubit_permutation[p] is the original qubit at standard-frame position p.
    std::vector<size_t> qubit_permutation;
    BitMatrix standard;
    /// `standard` mapped back to the original frame; same row space as the input.
    BitMatrix stabilizers;
    BitMatrix logical_x;
    /// Z-only rows.
    BitMatrix logical_z;
    /// destabilizers row i anticommutes with exactly stabilizers row i.
    BitMatrix destabilizers;
};

/// A stabilizer code given by an (n - k) x 2n generator matrix. Signs are not
/// tracked; a code is its projective row space.
class StabilizerCode {
   public:
    /// Checks pairwise commutation and independence. Throws CodeValidationError.
    static StabilizerCode validate(BitMatrix generators, std::string name = {}, std::optional<int> distance = {});
    /// `num_qubits` is needed only when `paulis` is empty.
    static StabilizerCode from_paulis(const std::vector<std::string> &paulis, std::string name = {},
                                      std::optional<size_t> num_qubits = {});

    size_t num_qubits() const noexcept { return n_; }
    size_t num_logical() const noexcept { return n_ - generators_.num_rows(); }
    size_t num_generators() const noexcept { return generators_.num_rows(); }
    const BitMatrix &generators() const noexcept { return generators_; }
    PauliVec generator(size_t i) const { return PauliVec(generators_.row(i)); }
    const std::string &name() const noexcept { return name_; }
    /// Informational only; never computed.
    std::optional<int> declared_distance() const noexcept { return distance_; }

    /// Computed once and shared between copies; safe for concurrent readers.
    const StandardFormCode &standard_form() const;
    const RowSpace &row_space() const;

   private:
    struct Cache;

    size_t n_ = 0;
    BitMatrix generators_;
    std::string name_;
    std::optional<int> distance_;
    std::shared_ptr<Cache> cache_;
};

StandardFormCode compute_standard_form(const StabilizerCode &code);

/// True iff M maps every generator into the stabilizer row space.
bool preserves_code(const SymplecticMatrix &m, const StabilizerCode &code);

/// The 2k x 2k symplectic matrix induced on the logical representatives
/// (L_x | L_z). Throws std::invalid_argument if M does not preserve the code.
SymplecticMatrix logical_action(const SymplecticMatrix &m, const StabilizerCode &code);

}  // namespace nogo
