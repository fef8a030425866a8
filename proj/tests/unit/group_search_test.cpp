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
#include <set>

#include "nogo/group_search.hpp"
#include "test_support.hpp"

namespace nogo {
namespace {

using testing::corpus_code;

TEST(GroupClosure, GeneratedGroups) {
    std::vector<SymplecticMatrix> gens = {gates::hadamard(), gates::phase()};
    GroupClosure sp2 = generate_group(1, gens);
    EXPECT_TRUE(sp2.complete());
    EXPECT_EQ(sp2.size(), 6u);
    EXPECT_TRUE(is_full_clifford(sp2, 1));

    std::vector<SymplecticMatrix> two = {embed(gates::hadamard(), std::vector<size_t>{0}, 2),
                                         embed(gates::phase(), std::vector<size_t>{0}, 2), gates::cnot(),
                                         embed(gates::cnot(), std::vector<size_t>{1, 0}, 2)};
    GroupClosure sp4 = generate_group(2, two);
    EXPECT_EQ(sp4.size(), 720u);
    EXPECT_TRUE(is_full_clifford(sp4, 2));
    auto hist = sp4.order_histogram();
    EXPECT_EQ(hist[5], 144u);

    GroupClosure capped = generate_group(2, two, 100);
    EXPECT_FALSE(capped.complete());
    EXPECT_THROW(is_full_clifford(capped, 2), std::invalid_argument);

    std::vector<SymplecticMatrix> bell = {bell_matrix()};
    EXPECT_EQ(generate_group(2, bell).size(), 5u);
    EXPECT_THROW(generate_group(1, bell), std::invalid_argument);
}

/// Preservation checked one candidate at a time with the matrix routines.
std::set<std::pair<Permutation, std::vector<LocalClifford>>> naive_preserving(const StabilizerCode &code,
                                                                              const std::vector<Permutation> &perms) {
    std::set<std::pair<Permutation, std::vector<LocalClifford>>> out;
    size_t n = code.num_qubits();
    uint64_t count = 1;
    for (size_t i = 0; i < n; i++) {
        count *= 6;
    }
    for (const auto &p : perms) {
        for (uint64_t idx = 0; idx < count; idx++) {
            std::vector<LocalClifford> locals(n);
            uint64_t x = idx;
            for (size_t q = 0; q < n; q++) {
                locals[q] = kAllLocals[x % 6];
                x /= 6;
            }
            Automorphism a{p, locals};
            if (preserves_code(aut_to_symplectic(a), code)) {
                out.emplace(p, locals);
            }
        }
    }
    return out;
}

TEST(Enumeration, PackedEngineMatchesNaive) {
    std::mt19937_64 rng(41);
    std::vector<StabilizerCode> codes = {corpus_code("four_two_two"), corpus_code("bell_pair"),
                                         testing::random_code(4, 2, rng), testing::random_code(4, 1, rng),
                                         testing::random_code(3, 3, rng)};
    for (const auto &code : codes) {
        auto perms = all_permutations(code.num_qubits());
        std::set<std::pair<Permutation, std::vector<LocalClifford>>> found;
        uint64_t candidates = for_each_preserving_automorphism(
            code, perms, std::nullopt, [&](const Automorphism &a) { found.emplace(a.perm, a.locals); });
        uint64_t per_perm = 1;
        for (size_t q = 0; q < code.num_qubits(); q++) {
            per_perm *= 6;
        }
        EXPECT_EQ(candidates, perms.size() * per_perm);
        EXPECT_EQ(found, naive_preserving(code, perms));
    }
}

TEST(Enumeration, ThreadsGiveSameGroup) {
    StabilizerCode code = corpus_code("four_two_two");
    SearchOptions one;
    SearchOptions many;
    many.threads = 4;
    auto a = automorphism_logical_group(code, one);
    auto b = automorphism_logical_group(code, many);
    EXPECT_EQ(a.preserving, b.preserving);
    EXPECT_EQ(a.group.size(), b.group.size());
    auto ea = a.group.elements();
    auto eb = b.group.elements();
    EXPECT_EQ(ea, eb);
}

TEST(Enumeration, TransversalGroups) {
    auto steane = transversal_logical_group(corpus_code("steane"));
    EXPECT_EQ(steane.candidates, 279936u);
    EXPECT_EQ(steane.group.size(), 6u);
    EXPECT_TRUE(is_full_clifford(steane.group, 1));

    auto c422 = transversal_logical_group(corpus_code("four_two_two"));
    EXPECT_FALSE(is_full_clifford(c422.group, 2));
    EXPECT_EQ(c422.group.order_histogram().count(5), 0u);

    // Logical images of every preserving gadget are in the reported group.
    StabilizerCode code = corpus_code("four_two_two");
    for_each_preserving_automorphism(code, {identity_permutation(4)}, std::nullopt, [&](const Automorphism &a) {
        EXPECT_TRUE(c422.group.contains(logical_action(aut_to_symplectic(a), code)));
    });
}

TEST(Enumeration, FeasibilityLimits) {
    std::vector<std::string> nine(8, "IIIIIIIII");
    for (size_t i = 0; i < 8; i++) {
        nine[i][i] = 'Z';
    }
    StabilizerCode big = StabilizerCode::from_paulis(nine);
    EXPECT_THROW(transversal_logical_group(big), FeasibilityError);
    EXPECT_THROW(automorphism_logical_group(corpus_code("six_two_two")), FeasibilityError);
    EXPECT_THROW(automorphism_logical_group(corpus_code("steane")), FeasibilityError);

    // Explicit lists lift the limits.
    SearchOptions opts;
    opts.perms = std::vector<Permutation>{identity_permutation(9)};
    opts.locals = std::vector<std::vector<LocalClifford>>{std::vector<LocalClifford>(9, LocalClifford::I),
                                                          std::vector<LocalClifford>(9, LocalClifford::S)};
    auto r = automorphism_logical_group(big, opts);
    EXPECT_EQ(r.candidates, 2u);
    EXPECT_EQ(r.preserving, 2u);
    EXPECT_EQ(r.group.size(), 2u);
}

TEST(NoGo, FourTwoTwoBothModes) {
    StabilizerCode code = corpus_code("four_two_two");
    NoGoReport t = no_go_witness(code, NoGoMode::Transversal);
    EXPECT_TRUE(t.passed);
    EXPECT_EQ(t.prime, 5u);
    EXPECT_EQ(t.order_prime_count, 0u);
    EXPECT_EQ(t.target.order, 5u);
    NoGoReport a = no_go_witness(code, NoGoMode::Automorphism);
    EXPECT_TRUE(a.passed);
    EXPECT_EQ(a.candidates, 31104u);
    EXPECT_EQ(a.bell_like_count, 0u);
    EXPECT_TRUE(a.permutations_keep_z_commuting.value());
    EXPECT_EQ(a.pure_permutation_gadgets, 24u);
    EXPECT_THROW(no_go_witness(corpus_code("steane")), std::invalid_argument);
}

TEST(NoGo, BellLikePredicate) {
    EXPECT_TRUE(is_bell_like(bell_matrix()));
    EXPECT_FALSE(keeps_logical_z_commuting(bell_matrix()));
    EXPECT_TRUE(keeps_logical_z_commuting(SymplecticMatrix::identity(2)));
    EXPECT_FALSE(is_bell_like(gates::cnot()));
    SymplecticMatrix swap = permutation_matrix({1, 0});
    EXPECT_TRUE(keeps_logical_z_commuting(swap));
}

}  // namespace
}  // namespace nogo
