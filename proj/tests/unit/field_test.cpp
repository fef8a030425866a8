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

#include <random>

#include "nogo/field.hpp"
#include "nogo/number_theory.hpp"
#include "test_support.hpp"

namespace nogo {
namespace {

TEST(NumberTheory, FactorizeAndPrimes) {
    EXPECT_EQ(factorize(720), (std::vector<PrimePower>{{2, 4}, {3, 2}, {5, 1}}));
    EXPECT_TRUE(factorize(1).empty());
    EXPECT_TRUE(is_prime(65537));
    EXPECT_FALSE(is_prime(65535));
    EXPECT_EQ(lcm_u64(4, 6), 12u);
    EXPECT_EQ(checked_pow(2, 63), uint64_t{1} << 63);
    EXPECT_THROW(checked_pow(2, 64), std::overflow_error);
}

TEST(Polynomial, Rendering) {
    EXPECT_EQ(polynomial_to_string({1, 1, 0, 0, 1}), "x^4 + x + 1");
    EXPECT_EQ(polynomial_to_string({2, 1, 1}), "x^2 + x + 2");
    EXPECT_EQ(polynomial_to_string({0, 2}), "2x");
}

TEST(Polynomial, IrreducibilityMatchesTrialDivision) {
    for (uint32_t p : {2u, 3u, 5u}) {
        for (unsigned m = 1; m <= (p == 2 ? 8u : 4u); m++) {
            uint64_t count = 1;
            for (unsigned i = 0; i < m; i++) {
                count *= p;
            }
            for (uint64_t code = 0; code < count; code++) {
                Polynomial poly(m + 1, 0);
                uint64_t c = code;
                for (unsigned i = 0; i < m; i++) {
                    poly[i] = static_cast<uint32_t>(c % p);
                    c /= p;
                }
                poly[m] = 1;
                ASSERT_EQ(is_irreducible(p, poly), testing::naive_irreducible(p, poly))
                    << "p=" << p << " " << polynomial_to_string(poly);
            }
        }
    }
}

TEST(Polynomial, SmallestIrreducibleAndPrimitive) {
    EXPECT_EQ(find_primitive(2, 2), (Polynomial{1, 1, 1}));
    EXPECT_EQ(find_primitive(2, 3), (Polynomial{1, 1, 0, 1}));
    EXPECT_EQ(find_primitive(2, 4), (Polynomial{1, 1, 0, 0, 1}));
    EXPECT_EQ(find_primitive(2, 1), (Polynomial{1, 1}));
    // x^4 + x^3 + x^2 + x + 1 is irreducible but alpha has order 5.
    auto f = FieldSpec::create(2, {1, 1, 1, 1, 1});
    EXPECT_EQ(multiplicative_order(FieldElement::alpha(f)), 5u);
    EXPECT_EQ(find_irreducible(3, 2), (Polynomial{1, 0, 1}));
    EXPECT_EQ(find_primitive(3, 2), (Polynomial{2, 1, 1}));
}

TEST(Polynomial, FoundPrimitivesAreIrreducibleAndSmallest) {
    for (unsigned m = 1; m <= 12; m++) {
        Polynomial poly = find_primitive(2, m);
        ASSERT_TRUE(testing::naive_irreducible(2, poly)) << m;
        auto field = FieldSpec::create(2, poly);
        EXPECT_EQ(multiplicative_order(FieldElement::alpha(field)), field->unit_count()) << m;
    }
}

TEST(FieldSpec, RejectsBadInput) {
    EXPECT_THROW(FieldSpec::create(4, {1, 1, 1}), std::invalid_argument);
    EXPECT_THROW(FieldSpec::create(2, {1, 0, 1}), std::invalid_argument);  // (x + 1)^2
    EXPECT_THROW(FieldSpec::create(3, {2, 1, 2}), std::invalid_argument);  // not monic
    EXPECT_THROW(FieldSpec::create(2, {1}), std::invalid_argument);
}

TEST(FieldElement, NinePowerTable) {
    auto f = FieldSpec::create(3, {2, 1, 1});
    std::vector<std::string> expected = {"alpha",  "2alpha + 1", "2alpha + 2", "2",
                                         "2alpha", "alpha + 2",  "alpha + 1",  "1"};
    FieldElement a = FieldElement::alpha(f);
    for (size_t k = 1; k <= 8; k++) {
        EXPECT_EQ(pow(a, k).str(), expected[k - 1]) << k;
    }
}

TEST(FieldElement, AxiomsOnRandomElements) {
    std::mt19937_64 rng(11);
    for (auto [p, m] : std::vector<std::pair<uint32_t, unsigned>>{{2, 8}, {3, 4}, {7, 3}, {2, 20}}) {
        auto f = FieldSpec::create(p, find_irreducible(p, m));
        std::uniform_int_distribution<uint32_t> coeff(0, p - 1);
        auto random_element = [&] {
            std::vector<uint32_t> c(m);
            for (auto &x : c) {
                x = coeff(rng);
            }
            return FieldElement::from_coeffs(f, c);
        };
        for (int trial = 0; trial < 50; trial++) {
            FieldElement a = random_element(), b = random_element(), c = random_element();
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a - a, FieldElement::zero(f));
            if (!a.is_zero()) {
                EXPECT_TRUE((a * inverse(a)).is_one());
                // Order divides p^m - 1 and is minimal.
                uint64_t ord = multiplicative_order(a);
                EXPECT_EQ(f->unit_count() % ord, 0u);
                EXPECT_TRUE(pow(a, ord).is_one());
                for (const auto &pp : factorize(ord)) {
                    EXPECT_FALSE(pow(a, ord / pp.prime).is_one());
                }
            }
        }
    }
}

TEST(FieldElement, TraceIsFrobeniusSum) {
    std::mt19937_64 rng(5);
    auto f = FieldSpec::create(3, find_irreducible(3, 4));
    std::uniform_int_distribution<uint32_t> coeff(0, 2);
    for (int trial = 0; trial < 40; trial++) {
        auto a = FieldElement::from_coeffs(f, {coeff(rng), coeff(rng), coeff(rng), coeff(rng)});
        FieldElement sum = FieldElement::zero(f);
        FieldElement frob = a;
        for (int i = 0; i < 4; i++) {
            sum += frob;
            frob = pow(frob, 3);
        }
        EXPECT_EQ(trace(a), sum);
        EXPECT_EQ(sum.coeffs()[0], absolute_trace(a));
        // Relative trace to GF(9): a + a^(3^2).
        EXPECT_EQ(trace(a, 2), a + pow(a, 9));
    }
}

TEST(FieldElement, ErrorsAndBits) {
    auto f = FieldSpec::create(2, find_primitive(2, 4));
    EXPECT_THROW(inverse(FieldElement::zero(f)), std::domain_error);
    EXPECT_THROW(multiplicative_order(FieldElement::zero(f)), std::domain_error);
    EXPECT_EQ(FieldElement::from_bits(f, 0b1011).to_bits(), 0b1011u);
    auto g = FieldSpec::create(3, {2, 1, 1});
    EXPECT_THROW(FieldElement::from_bits(g, 1), std::invalid_argument);
    EXPECT_THROW(FieldElement::one(f) + FieldElement::one(g), std::invalid_argument);
}

}  // namespace
}  // namespace nogo
