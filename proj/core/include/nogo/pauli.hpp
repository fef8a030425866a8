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
#include <string>
#include <string_view>

#include "nogo/bitvec.hpp"

namespace nogo {

/// A projective n-qubit Pauli operator as a length-2n vector (a | b):
/// X-part in positions [0, n), Z-part in [n, 2n).
class PauliVec {
   public:
    PauliVec() = default;
    explicit PauliVec(size_t num_qubits) : bits_(2 * num_qubits) {}
    /// Throws std::invalid_argument for odd length.
    explicit PauliVec(BitVec bits);

    /// Parses a string over {I, X, Y, Z}; '_' is accepted as I.
    /// Throws std::invalid_argument naming the 1-based column of a bad character.
    static PauliVec parse(std::string_view text);

    size_t num_qubits() const noexcept { return bits_.size() / 2; }
    bool x(size_t q) const noexcept { return bits_[q]; }
    bool z(size_t q) const noexcept { return bits_[num_qubits() + q]; }
    void set_x(size_t q, bool v) noexcept { bits_.set(q, v); }
    void set_z(size_t q, bool v) noexcept { bits_.set(num_qubits() + q, v); }

    const BitVec &bits() const noexcept { return bits_; }
    BitVec &bits() noexcept { return bits_; }

    /// Projective product (phases dropped).
    PauliVec &operator*=(const PauliVec &rhs) {
        bits_ ^= rhs.bits_;
        return *this;
    }
    friend PauliVec operator*(PauliVec a, const PauliVec &b) { return a *= b; }

    size_t weight() const noexcept;
    bool is_identity() const noexcept { return !bits_.any(); }

    /// Y where both bits are set.
    std::string str() const;

    bool operator==(const PauliVec &) const = default;

   private:
    BitVec bits_;
};

/// u^T J v over F2; zero iff the Paulis commute. Requires equal even lengths.
bool symplectic_form(const BitVec &u, const BitVec &v);
bool symplectic_product(const PauliVec &u, const PauliVec &v);

}  // namespace nogo
