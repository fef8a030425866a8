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
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nogo/constructions.hpp"
#include "nogo/gadget.hpp"
#include "nogo/stabilizer_code.hpp"
#include "nogo/symplectic.hpp"

namespace nogo {

/// An enumeration was refused because it would be too large.
class FeasibilityError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Row-major bit packing of a matrix; used as the set key for group elements.
BitVec canonical_key(const SymplecticMatrix &m);

/// A finite set of 2k x 2k symplectic matrices closed under products
/// (when complete()).
class GroupClosure {
   public:
    GroupClosure(size_t k, std::vector<SymplecticMatrix> generators);

    size_t k() const noexcept { return k_; }
    size_t size() const noexcept { return elements_.size(); }
    bool complete() const noexcept { return complete_; }
    const std::vector<SymplecticMatrix> &generators() const noexcept { return generators_; }
    /// Sorted by canonical key.
    std::vector<SymplecticMatrix> elements() const;
    bool contains(const SymplecticMatrix &m) const { return elements_.count(canonical_key(m)) > 0; }
    /// element order -> count.
    std::map<uint64_t, size_t> order_histogram() const;

   private:
    friend GroupClosure generate_group(size_t, std::span<const SymplecticMatrix>, size_t);

    size_t k_;
    std::vector<SymplecticMatrix> generators_;
    std::map<BitVec, SymplecticMatrix> elements_;
    bool complete_ = false;
};

inline constexpr size_t kDefaultClosureCap = 1'000'000;

/// Breadth-first closure of `generators` (all 2k x 2k) starting at the
/// identity. Stops with complete() == false once more than `cap` elements
/// would be needed.
GroupClosure generate_group(size_t k, std::span<const SymplecticMatrix> generators, size_t cap = kDefaultClosureCap);

/// Exhaustive list of Sp(2k, 2) by filtering all 2^(4k^2) matrices; k <= 2.
std::vector<SymplecticMatrix> enumerate_symplectic_group(size_t k);

/// True iff gc is complete and |gc| = |Sp(2k, 2)|. Throws for an incomplete closure.
bool is_full_clifford(const GroupClosure &gc, size_t k);

inline constexpr size_t kMaxTransversalQubits = 8;
inline constexpr size_t kMaxFullPermutationQubits = 6;
inline constexpr size_t kMaxFullLocalsQubits = 5;

struct SearchOptions {
    /// Explicit permutation list; default is all n! permutations (n <= 6).
    std::optional<std::vector<Permutation>> perms;
    /// Explicit local assignments (one LocalClifford per qubit); default is
    /// all 6^n (n <= 5 with permutations, n <= 8 without).
    std::optional<std::vector<std::vector<LocalClifford>>> locals;
    /// Worker threads; 0 uses the hardware concurrency.
    unsigned threads = 1;
};

/// Calls `visit` once for every automorphism in perms x locals that
/// preserves the code. Visits may come from several threads but are
/// serialized. Returns the number of candidates examined.
uint64_t for_each_preserving_automorphism(const StabilizerCode &code, const std::vector<Permutation> &perms,
                                          const std::optional<std::vector<std::vector<LocalClifford>>> &locals,
                                          const std::function<void(const Automorphism &)> &visit,
                                          unsigned threads = 1);

struct LogicalGroupResult {
    GroupClosure group;
    uint64_t candidates = 0;
    uint64_t preserving = 0;
};

/// All 6^n transversal gadgets (n <= 8), filtered by preservation and mapped
/// to their logical actions. The image is asserted to already be a group.
LogicalGroupResult transversal_logical_group(const StabilizerCode &code, unsigned threads = 1);

/// Permutations x locals, filtered and mapped like transversal_logical_group.
LogicalGroupResult automorphism_logical_group(const StabilizerCode &code, const SearchOptions &options = {});

/// All permutations of n points in lexicographic order.
std::vector<Permutation> all_permutations(size_t n);

/// g z_i commutes with z_i for every logical-Z basis vector z_i = e_(k+i).
bool keeps_logical_z_commuting(const SymplecticMatrix &g);
/// Order 5 and some logical-Z basis vector is mapped to an anticommuting Pauli.
bool is_bell_like(const SymplecticMatrix &g);

enum class NoGoMode { Transversal, Automorphism };

struct NoGoReport {
    NoGoMode mode = NoGoMode::Transversal;
    std::string code_name;
    size_t n = 0;
    size_t k = 0;
    uint64_t candidates = 0;
    uint64_t preserving = 0;
    size_t group_size = 0;
    BigUint full_group_order;
    bool is_full = false;
    uint64_t prime = 0;
    std::map<uint64_t, size_t> order_histogram;
    /// Logical elements whose order is `prime`.
    size_t order_prime_count = 0;
    /// Logical elements of order 5 sending some logical Z to an anticommuting Pauli.
    size_t bell_like_count = 0;
    /// Automorphism mode: every pure-permutation logical action keeps logical Zs commuting.
    std::optional<bool> permutations_keep_z_commuting;
    size_t pure_permutation_gadgets = 0;
    /// The order-p logical target that the predicted obstruction rules out.
    OrderConstruction target;
    /// Observations match the predictions.
    bool passed = false;
};

/// Exhaustive evidence for the no-go predictions on one code with k >= 2.
NoGoReport no_go_witness(const StabilizerCode &code, NoGoMode mode = NoGoMode::Transversal,
                         const SearchOptions &options = {});

}  // namespace nogo
