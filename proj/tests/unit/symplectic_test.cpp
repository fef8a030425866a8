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

#include <map>
#include <random>

#include "nogo/group_search.hpp"
#include "nogo/symplectic.hpp"
#include "test_support.hpp"

namespace nogo {
namespace {

TEST(Symplectic, ValidationAndGates) {
    EXPECT_TRUE(is_symplectic(gates::hadamard().matrix()));
    EXPECT_TRUE(is_symplectic(gates::phase().matrix()));
    EXPECT_TRUE(is_symplectic(gates::cnot().matrix()));
    EXPECT_FALSE(is_symplectic(BitMatrix::from_strings({"11", "01"}) * BitMatrix::from_strings({"10", "00"})));
    EXPECT_THROW(is_symplectic(BitMatrix(3, 3)), std::invalid_argument);
    EXPECT_THROW(is_symplectic(BitMatrix(2, 4)), std::invalid_argument);
    EXPECT_THROW(SymplecticMatrix(BitMatrix(2, 2)), std::invalid_argument);
    // CNOT: X_c -> X_c X_t, Z_t -> Z_c Z_t.
    SymplecticMatrix c = gates::cnot();
    EXPECT_EQ(c.apply(PauliVec::parse("XI")).str(), "XX");
    EXPECT_EQ(c.apply(PauliVec::parse("IZ")).str(), "ZZ");
    EXPECT_EQ(gates::phase().apply(PauliVec::parse("X")).str(), "Y");
}

TEST(Symplectic, InverseAndPowers) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; trial++) {
        SymplecticMatrix m = testing::random_clifford(4, 30, rng);
        EXPECT_TRUE((m * m.inverse()).is_identity());
        EXPECT_EQ(m.pow(5), m * m * m * m * m);
        EXPECT_EQ(m.pow_signed(-2), m.inverse() * m.inverse());
    }
}

TEST(Symplectic, GroupOrderFormula) {
    EXPECT_EQ(group_order(1), 6);
    EXPECT_EQ(group_order(2), 720);
    EXPECT_EQ(group_order(3), 1451520);
    // Product of (2^(2k) - 2^(2i)) * 2^(2i-1) style recursion:
    // |Sp(2k)| = |Sp(2k-2)| * 2^(2k-1) * (4^k - 1).
    BigUint expected = 6;
    for (size_t k = 2; k <= 40; k++) {
        expected *= (BigUint(1) << (2 * k - 1)) * ((BigUint(1) << (2 * k)) - 1);
        ASSERT_EQ(group_order(k), expected) << k;
    }
    for (size_t k = 1; k <= 20; k++) {
        BigUint prod = 1;
        for (const auto &f : group_order_factors(k)) {
            EXPECT_TRUE(is_prime(f.prime));
            for (unsigned e = 0; e < f.exponent; e++) {
                prod *= f.prime;
            }
        }
        EXPECT_EQ(prod, group_order(k));
    }
}

TEST(Symplectic, BruteForceEnumeration) {
    EXPECT_EQ(BigUint(enumerate_symplectic_group(1).size()), group_order(1));
    auto sp4 = enumerate_symplectic_group(2);
    EXPECT_EQ(BigUint(sp4.size()), group_order(2));
    std::map<uint64_t, size_t> hist;
    for (const auto &m : sp4) {
        uint64_t ord = element_order(m);
        hist[ord]++;
    }
    // Orders occurring in Sp(4, 2) ~ S6.
    for (const auto &[ord, count] : hist) {
        EXPECT_TRUE(ord == 1 || ord == 2 || ord == 3 || ord == 4 || ord == 5 || ord == 6) << ord;
    }
    EXPECT_EQ(hist[1], 1u);
    EXPECT_EQ(hist[5], 144u);
    EXPECT_EQ(hist.count(7), 0u);
    EXPECT_THROW(enumerate_symplectic_group(3), FeasibilityError);
}

TEST(Symplectic, ElementOrderMatchesNaive) {
    std::mt19937_64 rng(8);
    for (size_t n : {1u, 2u, 3u, 4u}) {
        for (int trial = 0; trial < 40; trial++) {
            SymplecticMatrix m = testing::random_clifford(n, 5 + trial, rng);
            ASSERT_EQ(element_order(m), testing::naive_order(m)) << m;
        }
    }
}

TEST(Symplectic, EmbedAndTensor) {
    SymplecticMatrix h = gates::hadamard();
    SymplecticMatrix hh = tensor(std::vector<SymplecticMatrix>{h, h});
    EXPECT_EQ(hh, embed(h, std::vector<size_t>{0}, 2) * embed(h, std::vector<size_t>{1}, 2));
    SymplecticMatrix reversed = embed(gates::cnot(), std::vector<size_t>{1, 0}, 2);
    EXPECT_EQ(reversed.apply(PauliVec::parse("IX")).str(), "XX");
    EXPECT_THROW(embed(h, std::vector<size_t>{2}, 2), std::invalid_argument);
}

}  // namespace
}  // namespace nogo
