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

#include <gtest/gtest.h>

#include "nogo/constructions.hpp"
#include "test_support.hpp"

namespace nogo {
namespace {

TEST(PrimitivePrimeDivisor, MatchesTrialDivision) {
    std::vector<uint64_t> expected = {3, 5, 7, 17, 11, 13, 43, 257};
    for (size_t k = 1; k <= 8; k++) {
        EXPECT_EQ(primitive_prime_divisor(k), expected[k - 1]) << k;
        EXPECT_EQ(primitive_prime_divisor(k), testing::naive_primitive_prime_divisor(k)) << k;
    }
    EXPECT_THROW(primitive_prime_divisor(0), std::invalid_argument);
}

TEST(Companion, MultipliesByAlpha) {
    Polynomial poly = find_primitive(2, 5);
    auto field = FieldSpec::create(2, poly);
    BitMatrix c = companion_matrix(poly);
    FieldElement alpha = FieldElement::alpha(field);
    for (uint64_t bits = 0; bits < 32; bits++) {
        FieldElement a = FieldElement::from_bits(field, bits);
        EXPECT_EQ(c.apply(BitVec::from_u64(bits, 5)).to_u64(), (alpha * a).to_bits());
    }
}

TEST(ConstructV, SmallCaseBlocks) {
    OrderConstruction v = construct_v(2);
    EXPECT_EQ(v.matrix.matrix().block(0, 0, 2, 2), BitMatrix::from_strings({"01", "11"}));
    EXPECT_EQ(v.matrix.matrix().block(2, 2, 2, 2), BitMatrix::from_strings({"11", "10"}));
    EXPECT_TRUE(v.matrix.matrix().block(0, 2, 2, 2).is_zero());
    EXPECT_EQ(v.order, 3u);
    EXPECT_TRUE(construct_v(1).matrix.is_identity());
}

TEST(ConstructW, SmallCaseWithGivenBasis) {
    WOptions options;
    options.theta_exponent = 1;
    options.basis_exponents = std::vector<uint64_t>{0, 5, 3, 4};
    OrderConstruction w = construct_w(2, options);
    EXPECT_EQ(w.matrix.matrix(), BitMatrix::from_strings({"0010", "0110", "1011", "0111"}));
    EXPECT_EQ(w.order, 5u);
}

TEST(ConstructW, DefaultBasisIsSymplectic) {
    for (size_t k = 1; k <= 6; k++) {
        OrderConstruction w = construct_w(k);
        auto field = FieldSpec::create(2, w.polynomial);
        FieldElement theta = pow(FieldElement::alpha(field), *w.theta_exponent);
        TraceForm form(field, k, theta);
        std::vector<FieldElement> basis;
        for (uint64_t b : w.basis) {
            basis.push_back(FieldElement::from_bits(field, b));
        }
        ASSERT_EQ(basis.size(), 2 * k);
        // B(u_i, u_j) = B(v_i, v_j) = 0, B(u_i, v_j) = delta_ij, checked entry by entry.
        for (size_t i = 0; i < k; i++) {
            for (size_t j = 0; j < k; j++) {
                EXPECT_FALSE(form(basis[i], basis[j]));
                EXPECT_FALSE(form(basis[k + i], basis[k + j]));
                EXPECT_EQ(form(basis[i], basis[k + j]), i == j);
            }
        }
        // W is multiplication by t = alpha^(2^k - 1): W e_j is t * basis_j in basis coordinates.
        FieldElement t = pow(FieldElement::alpha(field), (uint64_t{1} << k) - 1);
        for (size_t j = 0; j < 2 * k; j++) {
            FieldElement image = FieldElement::zero(field);
            for (size_t i = 0; i < 2 * k; i++) {
                if (w.matrix.get(i, j)) {
                    image += basis[i];
                }
            }
            EXPECT_EQ(image, t * basis[j]);
        }
    }
}

TEST(TraceForm, DegenerateThetas) {
    auto field = FieldSpec::create(2, find_primitive(2, 4));
    FieldElement alpha = FieldElement::alpha(field);
    std::vector<uint64_t> degenerate;
    for (uint64_t j = 0; j < 15; j++) {
        TraceForm form(field, 2, pow(alpha, j));
        // Alternating: B(a, a) = 0 always.
        for (uint64_t bits = 0; bits < 16; bits++) {
            FieldElement a = FieldElement::from_bits(field, bits);
            ASSERT_FALSE(form(a, a));
        }
        if (!form.is_nondegenerate()) {
            degenerate.push_back(j);
        }
    }
    EXPECT_EQ(degenerate, (std::vector<uint64_t>{0, 5, 10}));
    WOptions bad;
    bad.theta_exponent = 5;
    EXPECT_THROW(construct_w(2, bad), std::invalid_argument);
}

TEST(Constructions, OrderSweep) {
    for (size_t k = 1; k <= 8; k++) {
        OrderConstruction v = construct_v(k), w = construct_w(k), p = construct_prime_order(k);
        EXPECT_EQ(element_order(v.matrix), (uint64_t{1} << k) - 1) << k;
        EXPECT_EQ(element_order(w.matrix), (uint64_t{1} << k) + 1) << k;
        EXPECT_EQ(element_order(p.matrix), testing::naive_primitive_prime_divisor(k)) << k;
        EXPECT_EQ(*p.prime, p.order);
        for (const auto *c : {&v, &w, &p}) {
            EXPECT_TRUE(is_symplectic(c->matrix.matrix()));
        }
    }
    EXPECT_THROW(construct_v(0), std::invalid_argument);
}

}  // namespace
}  // namespace nogo
