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
#include <optional>
#include <string_view>
#include <vector>

#include "nogo/field.hpp"
#include "nogo/symplectic.hpp"

namespace nogo {

/// Smallest prime dividing 4^k - 1 but no 4^i - 1 with 1 <= i < k.
/// Supports 1 <= k <= 32.
uint64_t primitive_prime_divisor(size_t k);

/// Companion matrix of a monic polynomial over F2: ones on the subdiagonal,
/// last column a_0 .. a_{k-1}. Multiplication by alpha in the basis
/// {1, alpha, ..., alpha^(k-1)}.
BitMatrix companion_matrix(const Polynomial &poly);

/// The alternating form B(a, b) = Tr(theta * (a b^(2^k) + a^(2^k) b)) on
/// GF(2^(2k)) viewed as a 2k-dimensional space over F2.
class TraceForm {
   public:
    TraceForm(FieldSpecPtr field, size_t k, FieldElement theta);

    bool operator()(const FieldElement &a, const FieldElement &b) const;
    /// Gram matrix G[i][j] = B(basis[i], basis[j]).
    BitMatrix gram(const std::vector<FieldElement> &basis) const;
    /// Full-rank Gram matrix over the polynomial basis.
    bool is_nondegenerate() const;

    const FieldSpecPtr &field() const noexcept { return field_; }
    size_t half_dim() const noexcept { return k_; }
    const FieldElement &theta() const noexcept { return theta_; }

   private:
    FieldSpecPtr field_;
    size_t k_;
    uint64_t frobenius_k_;  // 2^k
    FieldElement theta_;
};

/// {1, alpha, ..., alpha^(2k-1)}.
std::vector<FieldElement> polynomial_basis(const FieldSpecPtr &field);

/// Deterministic symplectic Gram-Schmidt. Returns (u_1..u_k, v_1..v_k) with
/// B(u_i, u_j) = B(v_i, v_j) = 0 and B(u_i, v_j) = delta_ij.
/// Throws std::invalid_argument if the form is degenerate on the span.
std::vector<FieldElement> symplectic_basis(const TraceForm &form, std::vector<FieldElement> start);

/// Checks B(u_i, u_j) = 0, B(v_i, v_j) = 0, B(u_i, v_j) = delta_ij.
bool is_symplectic_basis(const TraceForm &form, const std::vector<FieldElement> &basis);

enum class ConstructionKind { MinusOne, PlusOne, PrimeOrder };

std::string_view to_string(ConstructionKind kind);

/// A symplectic matrix of prescribed order together with how it was built.
struct OrderConstruction {
    size_t k = 0;
    ConstructionKind kind = ConstructionKind::MinusOne;
    SymplecticMatrix matrix;
    uint64_t order = 0;

    /// Primitive polynomial: degree k for V, degree 2k for W.
    Polynomial polynomial;
    /// theta = alpha^theta_exponent (W only).
    std::optional<uint64_t> theta_exponent;
    /// Symplectic basis (u_1..u_k, v_1..v_k) as polynomial-basis bit patterns (W only).
    std::vector<uint64_t> basis;
    /// The multiplier t = alpha^(2^k - 1) as a bit pattern (W only).
    std::optional<uint64_t> multiplier;

    /// PrimeOrder only: the prime, which branch was raised, and the power used.
    std::optional<uint64_t> prime;
    std::optional<ConstructionKind> base_kind;
    std::optional<uint64_t> base_power;
};

/// V = diag(C_p, (C_p^-1)^T) for the primitive polynomial p of degree k;
/// order 2^k - 1.
OrderConstruction construct_v(size_t k);

struct WOptions {
    /// Use theta = alpha^j instead of searching j = 1, 2, ...
    std::optional<uint64_t> theta_exponent;
    /// Use the basis {alpha^e} in the given order instead of Gram-Schmidt.
    std::optional<std::vector<uint64_t>> basis_exponents;
};

/// Multiplication by t = alpha^(2^k - 1) on GF(2^(2k)), written in a
/// symplectic basis of the trace form; order 2^k + 1.
OrderConstruction construct_w(size_t k, const WOptions &options = {});

/// V^((2^k-1)/p) or W^((2^k+1)/p) where p = primitive_prime_divisor(k);
/// order exactly p.
OrderConstruction construct_prime_order(size_t k);

}  // namespace nogo
