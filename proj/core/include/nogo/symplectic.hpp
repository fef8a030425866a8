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
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nogo/bitmatrix.hpp"
#include "nogo/number_theory.hpp"
#include "nogo/pauli.hpp"

namespace nogo {

using BigUint = boost::multiprecision::cpp_int;

/// J = [[0, I_n], [I_n, 0]].
BitMatrix symplectic_form_matrix(size_t num_qubits);

/// True iff M^T J M = J. Throws std::invalid_argument for a non-square or
/// odd-dimensional matrix.
bool is_symplectic(const BitMatrix &m);

/// A projective Clifford on n qubits: a 2n x 2n matrix over F2 with
/// M^T J M = J, acting on Pauli column vectors as v -> M v.
class SymplecticMatrix {
   public:
    SymplecticMatrix() = default;
    /// Throws std::invalid_argument unless `m` is symplectic.
    explicit SymplecticMatrix(BitMatrix m);

    static SymplecticMatrix identity(size_t num_qubits);
    static SymplecticMatrix from_strings(std::initializer_list<std::string_view> rows);

    size_t num_qubits() const noexcept { return m_.num_rows() / 2; }
    size_t dim() const noexcept { return m_.num_rows(); }
    const BitMatrix &matrix() const noexcept { return m_; }
    bool get(size_t r, size_t c) const noexcept { return m_.get(r, c); }

    BitVec apply(const BitVec &v) const { return m_.apply(v); }
    PauliVec apply(const PauliVec &v) const { return PauliVec(m_.apply(v.bits())); }

    SymplecticMatrix operator*(const SymplecticMatrix &rhs) const;
    /// J M^T J, which is the inverse of any symplectic matrix.
    SymplecticMatrix inverse() const;
    SymplecticMatrix pow(uint64_t exponent) const;
    /// M^(-e) for negative e.
    SymplecticMatrix pow_signed(int64_t exponent) const;
    bool is_identity() const noexcept { return m_.is_identity(); }

    bool operator==(const SymplecticMatrix &) const = default;

   private:
    struct Unchecked {};
    SymplecticMatrix(BitMatrix m, Unchecked) : m_(std::move(m)) {}

    BitMatrix m_;
};

std::ostream &operator<<(std::ostream &out, const SymplecticMatrix &m);

/// |Sp(2k, 2)| = 2^(k^2) * prod_{i=1..k} (4^i - 1).
BigUint group_order(size_t k);
/// Prime factorization of group_order(k). Supports k <= 63.
std::vector<PrimePower> group_order_factors(size_t k);

/// Smallest r >= 1 with M^r = I. Works prime by prime over the
/// factorization of |Sp(2n, 2)|, so it never iterates beyond the group order.
uint64_t element_order(const SymplecticMatrix &m);

/// Places an m-qubit matrix on `qubits` (distinct, in order) of an n-qubit
/// register, identity elsewhere.
SymplecticMatrix embed(const SymplecticMatrix &gate, std::span<const size_t> qubits, size_t num_qubits);
/// Block-diagonal product of per-qubit (or per-block) gates, in order.
SymplecticMatrix tensor(std::span<const SymplecticMatrix> gates);

namespace gates {
SymplecticMatrix hadamard();  ///< [[0,1],[1,0]]
SymplecticMatrix phase();     ///< [[1,0],[1,1]]
/// Control on qubit 0, target on qubit 1.
SymplecticMatrix cnot();
}  // namespace gates

}  // namespace nogo
