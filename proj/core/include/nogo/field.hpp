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
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "nogo/number_theory.hpp"

namespace nogo {

/// Polynomial over F_p, constant term first. Monic polynomials carry their
/// leading 1 explicitly, so a degree-m polynomial has m + 1 coefficients.
using Polynomial = std::vector<uint32_t>;

/// Renders e.g. {1, 1, 0, 0, 1} as "x^4 + x + 1".
std::string polynomial_to_string(const Polynomial &poly, std::string_view var = "x");

/// Lexicographically smallest monic irreducible polynomial of degree m over
/// F_p, reading the low coefficients as a base-p integer with the constant
/// term least significant.
Polynomial find_irreducible(uint32_t p, unsigned m);

/// Smallest (same ordering) monic irreducible polynomial whose root generates
/// the multiplicative group of F_{p^m}. For F_2 itself this is x + 1.
Polynomial find_primitive(uint32_t p, unsigned m);

/// Ben-Or irreducibility test over F_p.
bool is_irreducible(uint32_t p, const Polynomial &poly);

/// GF(p^m) presented as F_p[x] / (modulus).
class FieldSpec {
   public:
    /// Validates that p is prime, the modulus is monic of degree >= 1 and
    /// irreducible, and p^m <= 2^64.
    static std::shared_ptr<const FieldSpec> create(uint32_t p, Polynomial modulus);

    uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return m_; }
    const Polynomial &modulus() const noexcept { return modulus_; }
    /// p^m - 1, the size of the multiplicative group.
    uint64_t unit_count() const noexcept { return unit_count_; }
    /// Prime factorization of unit_count(), cached at construction.
    const std::vector<PrimePower> &unit_count_factors() const noexcept { return unit_factors_; }

    bool operator==(const FieldSpec &other) const { return p_ == other.p_ && modulus_ == other.modulus_; }

   private:
    FieldSpec() = default;

    uint32_t p_ = 0;
    unsigned m_ = 0;
    Polynomial modulus_;
    uint64_t unit_count_ = 0;
    std::vector<PrimePower> unit_factors_;
};

using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/// Element of a FieldSpec; coefficient i multiplies alpha^i.
class FieldElement {
   public:
    static FieldElement zero(FieldSpecPtr spec);
    static FieldElement one(FieldSpecPtr spec);
    /// The residue class alpha of x.
    static FieldElement alpha(FieldSpecPtr spec);
    /// Coefficients are reduced mod p; shorter vectors are zero-padded.
    static FieldElement from_coeffs(FieldSpecPtr spec, std::vector<uint32_t> coeffs);
    /// Characteristic 2 only: bit i of `bits` is the coefficient of alpha^i.
    static FieldElement from_bits(FieldSpecPtr spec, uint64_t bits);

    const FieldSpecPtr &spec() const noexcept { return spec_; }
    const std::vector<uint32_t> &coeffs() const noexcept { return coeffs_; }
    /// Characteristic 2 only.
    uint64_t to_bits() const;

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    FieldElement &operator+=(const FieldElement &rhs);
    FieldElement &operator-=(const FieldElement &rhs);
    FieldElement &operator*=(const FieldElement &rhs);
    friend FieldElement operator+(FieldElement a, const FieldElement &b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement &b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement &b) { return a *= b; }
    FieldElement operator-() const;

    bool operator==(const FieldElement &other) const;

    /// Renders in powers of `var`, highest first, e.g. "2alpha + 1".
    std::string str(std::string_view var = "alpha") const;

   private:
    FieldElement(FieldSpecPtr spec, std::vector<uint32_t> coeffs);
    void require_same_field(const FieldElement &other) const;

    FieldSpecPtr spec_;
    std::vector<uint32_t> coeffs_;
};

FieldElement pow(const FieldElement &a, uint64_t exponent);
/// Throws std::domain_error for zero.
FieldElement inverse(const FieldElement &a);
/// Smallest r >= 1 with a^r = 1, found by stripping prime factors of p^m - 1.
/// Throws std::domain_error for zero.
uint64_t multiplicative_order(const FieldElement &a);
/// Relative trace to the subfield of degree `subfield_degree`:
/// sum over i < m/d of a^(p^(d*i)). With d = 1 the result lies in F_p.
FieldElement trace(const FieldElement &a, unsigned subfield_degree = 1);
/// Absolute trace as an integer in [0, p).
uint32_t absolute_trace(const FieldElement &a);

}  // namespace nogo
