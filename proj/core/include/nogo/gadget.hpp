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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nogo/symplectic.hpp"

namespace nogo {

/// The six elements of Sp(2, 2), i.e. single-qubit Cliffords modulo Paulis
/// and phases. Composite names are matrix products: HS = M_H * M_S.
enum class LocalClifford : uint8_t { I, H, S, HS, SH, HSH };

inline constexpr std::array<LocalClifford, 6> kAllLocals = {
    LocalClifford::I, LocalClifford::H, LocalClifford::S, LocalClifford::HS, LocalClifford::SH, LocalClifford::HSH};

const SymplecticMatrix &local_matrix(LocalClifford g);
/// Inverse of local_matrix; throws for a non-symplectic 2x2 matrix.
LocalClifford local_from_matrix(const SymplecticMatrix &m);
LocalClifford operator*(LocalClifford a, LocalClifford b);
LocalClifford inverse(LocalClifford g);
/// 1, 2 or 3.
uint64_t local_order(LocalClifford g);
std::string_view to_string(LocalClifford g);
/// Accepts the six names; "Sdg" and "S†" are aliases of S (equal projectively).
LocalClifford parse_local(std::string_view name);

/// perm[i] is the image of qubit i (0-based).
using Permutation = std::vector<size_t>;

Permutation identity_permutation(size_t n);
/// Throws std::invalid_argument if `perm` is not a bijection on [0, n).
void validate_permutation(const Permutation &perm);
/// Parses 1-based cycle notation like "(1 2 3)(4 5)"; "()" or "" is the identity.
Permutation parse_cycles(std::string_view text, size_t n);
/// Cycles of length >= 2 in 1-based notation, "()" for the identity.
std::string cycles_to_string(const Permutation &perm);
/// Every cycle including fixed points, each starting from its smallest element.
std::vector<std::vector<size_t>> cycles(const Permutation &perm);
/// a after b.
Permutation compose(const Permutation &a, const Permutation &b);
/// Maps X_i to X_perm[i] and Z_i to Z_perm[i].
SymplecticMatrix permutation_matrix(const Permutation &perm);

/// Disjoint cover of the qubits by blocks of at most fold() qubits.
class Partition {
   public:
    /// Throws std::invalid_argument unless `blocks` is a disjoint cover of [0, n).
    static Partition create(size_t n, std::vector<std::vector<size_t>> blocks);
    static Partition singletons(size_t n);

    size_t num_qubits() const noexcept { return n_; }
    const std::vector<std::vector<size_t>> &blocks() const noexcept { return blocks_; }
    /// Largest block size.
    size_t fold() const noexcept;
    /// block_of()[q] is the index of the block containing q.
    const std::vector<size_t> &block_of() const noexcept { return block_of_; }

    /// 1-based, blocks separated by '/', e.g. "1,2/3/4".
    std::string str() const;
    bool operator==(const Partition &other) const { return n_ == other.n_ && blocks_ == other.blocks_; }

   private:
    size_t n_ = 0;
    std::vector<std::vector<size_t>> blocks_;
    std::vector<size_t> block_of_;
};

/// An involution on the qubits; fixed points are allowed.
class ZXDuality {
   public:
    /// Throws std::invalid_argument unless tau o tau = id.
    explicit ZXDuality(Permutation tau);
    const Permutation &tau() const noexcept { return tau_; }
    /// The orbits {i, tau(i)} as a partition.
    Partition orbits() const;

   private:
    Permutation tau_;
};

/// Per-qubit local Cliffords followed by a qubit permutation.
struct Automorphism {
    Permutation perm;
    std::vector<LocalClifford> locals;

    /// Throws std::invalid_argument on a bad permutation or length mismatch.
    void validate() const;
    size_t num_qubits() const noexcept { return perm.size(); }
    static Automorphism identity(size_t n);
    static Automorphism transversal(std::vector<LocalClifford> locals);
    static Automorphism permutation(Permutation perm);
    bool operator==(const Automorphism &) const = default;
};

/// Apply b, then a.
Automorphism operator*(const Automorphism &a, const Automorphism &b);
Automorphism inverse(const Automorphism &a);

/// P * (tensor of locals): locals act first, then the permutation.
SymplecticMatrix aut_to_symplectic(const Automorphism &a);
/// lcm over cycles of (cycle length) * ord(product of the locals around it).
uint64_t aut_order_from_cycles(const Automorphism &a);
/// Matrix order, checked against aut_order_from_cycles.
uint64_t aut_order(const Automorphism &a);
/// Every cycle of length >= 2 has length p (and at least one exists), and
/// locals on fixed points are trivial. Throws for p <= 3 or composite p.
bool is_p_local(const Automorphism &a, uint64_t p);

struct PermutationConjugation {
    /// Transversal gadget V (identity permutation).
    Automorphism transversal;
    /// The bare permutation equal to V^-1 U V.
    Permutation perm;
    /// The prime cycle length.
    uint64_t prime = 0;
};

/// Builds V with V^-1 U V a pure qubit permutation, cycle by cycle: V is
/// trivial at the first qubit of each cycle and accumulates the locals along it.
/// Throws std::invalid_argument unless `a` is p-local of order p.
PermutationConjugation conjugate_to_permutation(const Automorphism &a);

/// Qubits i != j are coupled when any entry linking {X_i, Z_i} to {X_j, Z_j}
/// is nonzero, in either direction.
std::vector<std::vector<bool>> coupling_graph(const SymplecticMatrix &m);
/// True iff M couples no two qubits in different blocks.
bool is_kfold(const SymplecticMatrix &m, const Partition &part);

struct FoldResult {
    size_t fold;
    Partition partition;
};
/// Connected components of the coupling graph: the finest valid partition.
FoldResult min_fold(const SymplecticMatrix &m);
bool is_fold_transversal(const SymplecticMatrix &m, const ZXDuality &tau);

/// The order-5 projective two-qubit Bell gate.
SymplecticMatrix bell_matrix();
/// BELL^m maps I(x)Z to a Pauli anticommuting with I(x)Z for m = 1..4.
bool bell_anticommutation_check();

}  // namespace nogo
