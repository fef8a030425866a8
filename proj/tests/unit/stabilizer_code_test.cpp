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

#include "nogo/stabilizer_code.hpp"
#include "test_support.hpp"

namespace nogo {
namespace {

using testing::corpus;
using testing::corpus_code;

void expect_duality(const StabilizerCode &code) {
    const StandardFormCode &sf = code.standard_form();
    size_t r = code.num_generators();
    size_t k = code.num_logical();
    ASSERT_EQ(sf.stabilizers.num_rows(), r);
    ASSERT_EQ(sf.logical_x.num_rows(), k);
    ASSERT_EQ(sf.logical_z.num_rows(), k);
    ASSERT_EQ(sf.destabilizers.num_rows(), r);
    EXPECT_TRUE(RowSpace(sf.stabilizers) == code.row_space());
    auto form = [](const BitVec &a, const BitVec &b) { return symplectic_form(a, b); };
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < k; j++) {
            EXPECT_EQ(form(sf.logical_x.row(i), sf.logical_z.row(j)), i == j);
            EXPECT_FALSE(form(sf.logical_x.row(i), sf.logical_x.row(j)));
            EXPECT_FALSE(form(sf.logical_z.row(i), sf.logical_z.row(j)));
        }
        for (size_t s = 0; s < r; s++) {
            EXPECT_FALSE(form(sf.logical_x.row(i), sf.stabilizers.row(s)));
            EXPECT_FALSE(form(sf.logical_z.row(i), sf.stabilizers.row(s)));
            EXPECT_FALSE(form(sf.logical_x.row(i), sf.destabilizers.row(s)));
            EXPECT_FALSE(form(sf.logical_z.row(i), sf.destabilizers.row(s)));
        }
        // Logical Z is Z-only.
        for (size_t q = 0; q < code.num_qubits(); q++) {
            EXPECT_FALSE(sf.logical_z.get(i, q));
        }
    }
    for (size_t a = 0; a < r; a++) {
        for (size_t b = 0; b < r; b++) {
            EXPECT_EQ(form(sf.destabilizers.row(a), sf.stabilizers.row(b)), a == b);
            EXPECT_FALSE(form(sf.destabilizers.row(a), sf.destabilizers.row(b)));
        }
    }
    // Standard form block structure: leading identity of size x_rank in the X block.
    for (size_t i = 0; i < sf.x_rank; i++) {
        for (size_t j = 0; j < sf.x_rank; j++) {
            EXPECT_EQ(sf.standard.get(i, j), i == j);
        }
    }
    for (size_t i = sf.x_rank; i < r; i++) {
        for (size_t q = 0; q < code.num_qubits(); q++) {
            EXPECT_FALSE(sf.standard.get(i, q));
        }
    }
}

TEST(StabilizerCode, CorpusDuality) {
    for (const auto &entry : corpus()) {
        SCOPED_TRACE(entry.name);
        StabilizerCode code = corpus_code(entry.name);
        expect_duality(code);
        EXPECT_TRUE(testing::encoder(code).matrix().is_square());
    }
}

TEST(StabilizerCode, RandomCodeDuality) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; trial++) {
        size_t n = 1 + rng() % 9;
        size_t r = rng() % (n + 1);
        StabilizerCode code = testing::random_code(n, r, rng);
        SCOPED_TRACE(std::to_string(n) + " " + std::to_string(r));
        expect_duality(code);
    }
}

TEST(StabilizerCode, ValidationErrors) {
    try {
        StabilizerCode::from_paulis({"XX", "ZI"});
        FAIL();
    } catch (const CodeValidationError &e) {
        EXPECT_EQ(e.kind(), CodeValidationError::Kind::Anticommuting);
        EXPECT_EQ(e.row_a(), 0u);
        EXPECT_EQ(e.row_b(), 1u);
    }
    try {
        StabilizerCode::from_paulis({"XX", "ZZ", "YY"});
        FAIL();
    } catch (const CodeValidationError &e) {
        EXPECT_EQ(e.kind(), CodeValidationError::Kind::TooManyRows);
    }
    try {
        StabilizerCode::from_paulis({"XXI", "IXX", "XIX"});
        FAIL();
    } catch (const CodeValidationError &e) {
        EXPECT_EQ(e.kind(), CodeValidationError::Kind::DependentRow);
        EXPECT_EQ(e.row_a(), 2u);
    }
    EXPECT_THROW(StabilizerCode::validate(BitMatrix(1, 3)), CodeValidationError);
    EXPECT_THROW(StabilizerCode::from_paulis({"XX", "ZZZ"}), std::invalid_argument);
}

TEST(StabilizerCode, KnownLogicalActions) {
    StabilizerCode steane = corpus_code("steane");
    SymplecticMatrix h7 = tensor(std::vector<SymplecticMatrix>(7, gates::hadamard()));
    EXPECT_TRUE(preserves_code(h7, steane));
    EXPECT_EQ(logical_action(h7, steane), gates::hadamard());
    SymplecticMatrix s7 = tensor(std::vector<SymplecticMatrix>(7, gates::phase()));
    EXPECT_EQ(logical_action(s7, steane), gates::phase());

    StabilizerCode c422 = corpus_code("four_two_two");
    SymplecticMatrix h0 = embed(gates::hadamard(), std::vector<size_t>{0}, 4);
    EXPECT_FALSE(preserves_code(h0, c422));
    EXPECT_THROW(logical_action(h0, c422), std::invalid_argument);
}

TEST(StabilizerCode, LiftedLogicalsAreRecovered) {
    std::mt19937_64 rng(22);
    for (const auto &name : {"four_two_two", "six_two_two", "steane", "five_qubit", "bare_qubit"}) {
        StabilizerCode code = corpus_code(name);
        size_t k = code.num_logical();
        for (int trial = 0; trial < 10; trial++) {
            SymplecticMatrix target = testing::random_clifford(k, 12, rng);
            SymplecticMatrix physical = testing::lift_logical(code, target);
            ASSERT_TRUE(preserves_code(physical, code));
            EXPECT_EQ(logical_action(physical, code), target) << name;
        }
    }
}

TEST(StabilizerCode, LogicalActionIsHomomorphism) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; trial++) {
        StabilizerCode code = testing::random_code(6, 3, rng);
        SymplecticMatrix a = testing::random_preserving_gadget(code, rng);
        SymplecticMatrix b = testing::random_preserving_gadget(code, rng);
        ASSERT_TRUE(preserves_code(a, code));
        EXPECT_EQ(logical_action(a * b, code), logical_action(a, code) * logical_action(b, code));
        EXPECT_EQ(element_order(a) % element_order(logical_action(a, code)), 0u);
    }
}

TEST(StabilizerCode, StandardFormSharedBetweenCopies) {
    StabilizerCode code = corpus_code("steane");
    StabilizerCode copy = code;
    EXPECT_EQ(&code.standard_form(), &copy.standard_form());
}

}  // namespace
}  // namespace nogo
