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

#include "nogo/gadget.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nogo {

namespace {

const std::array<SymplecticMatrix, 6> &local_table() {
    static const std::array<SymplecticMatrix, 6> table = {
        SymplecticMatrix::from_strings({"10", "01"}),  // I
        SymplecticMatrix::from_strings({"01", "10"}),  // H
        SymplecticMatrix::from_strings({"10", "11"}),  // S
        SymplecticMatrix::from_strings({"11", "10"}),  // HS
        SymplecticMatrix::from_strings({"01", "11"}),  // SH
        SymplecticMatrix::from_strings({"11", "01"}),  // HSH
    };
    return table;
}

unsigned local_key(const SymplecticMatrix &m) {
    return m.get(0, 0) | (m.get(0, 1) << 1) | (m.get(1, 0) << 2) | (m.get(1, 1) << 3);
}

}  // namespace

const SymplecticMatrix &local_matrix(LocalClifford g) { return local_table()[static_cast<size_t>(g)]; }

LocalClifford local_from_matrix(const SymplecticMatrix &m) {
    if (m.num_qubits() != 1) {
        throw std::invalid_argument("local Clifford must be a 2x2 matrix");
    }
    unsigned key = local_key(m);
    for (LocalClifford g : kAllLocals) {
        if (local_key(local_matrix(g)) == key) {
            return g;
        }
    }
    throw std::logic_error("2x2 symplectic matrix missing from the local table");
}

LocalClifford operator*(LocalClifford a, LocalClifford b) { return local_from_matrix(local_matrix(a) * local_matrix(b)); }

LocalClifford inverse(LocalClifford g) { return local_from_matrix(local_matrix(g).inverse()); }

uint64_t local_order(LocalClifford g) {
    switch (g) {
        case LocalClifford::I:
            return 1;
        case LocalClifford::HS:
        case LocalClifford::SH:
            return 3;
        default:
            return 2;
    }
}

std::string_view to_string(LocalClifford g) {
    static constexpr std::array<std::string_view, 6> kNames = {"I", "H", "S", "HS", "SH", "HSH"};
    return kNames[static_cast<size_t>(g)];
}

LocalClifford parse_local(std::string_view name) {
    for (LocalClifford g : kAllLocals) {
        if (to_string(g) == name) {
            return g;
        }
    }
    if (name == "Sdg" || name == "S†" || name == "SDG") {
        return LocalClifford::S;
    }
    throw std::invalid_argument("unknown local Clifford '" + std::string(name) + "' (expected I, H, S, HS, SH, HSH)");
}

Permutation identity_permutation(size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), size_t{0});
    return p;
}

void validate_permutation(const Permutation &perm) {
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); i++) {
        if (perm[i] >= perm.size() || seen[perm[i]]) {
            throw std::invalid_argument("not a permutation: image of qubit " + std::to_string(i + 1) + " repeats or is out of range");
        }
        seen[perm[i]] = true;
    }
}

Permutation parse_cycles(std::string_view text, size_t n) {
    Permutation perm = identity_permutation(n);
    std::vector<bool> used(n, false);
    size_t i = 0;
    auto fail = [&](const std::string &what) {
        throw std::invalid_argument("cycle notation, column " + std::to_string(i + 1) + ": " + what);
    };
    auto skip_space = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) {
            i++;
        }
    };
    skip_space();
    while (i < text.size()) {
        if (text[i] != '(') {
            fail("expected '('");
        }
        i++;
        std::vector<size_t> cycle;
        while (true) {
            skip_space();
            if (i >= text.size()) {
                fail("unterminated cycle");
            }
            if (text[i] == ')') {
                i++;
                break;
            }
            if (text[i] < '0' || text[i] > '9') {
                fail(std::string("unexpected character '") + text[i] + "'");
            }
            size_t value = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                value = value * 10 + static_cast<size_t>(text[i] - '0');
                i++;
            }
            if (value < 1 || value > n) {
                fail("qubit " + std::to_string(value) + " out of range 1.." + std::to_string(n));
            }
            if (used[value - 1]) {
                fail("qubit " + std::to_string(value) + " appears twice");
            }
            used[value - 1] = true;
            cycle.push_back(value - 1);
        }
        for (size_t j = 0; j < cycle.size(); j++) {
            perm[cycle[j]] = cycle[(j + 1) % cycle.size()];
        }
        skip_space();
    }
    return perm;
}

std::vector<std::vector<size_t>> cycles(const Permutation &perm) {
    validate_permutation(perm);
    std::vector<bool> seen(perm.size(), false);
    std::vector<std::vector<size_t>> result;
    for (size_t start = 0; start < perm.size(); start++) {
        if (seen[start]) {
            continue;
        }
        std::vector<size_t> cycle;
        for (size_t q = start; !seen[q]; q = perm[q]) {
            seen[q] = true;
            cycle.push_back(q);
        }
        result.push_back(std::move(cycle));
    }
    return result;
}

std::string cycles_to_string(const Permutation &perm) {
    std::ostringstream out;
    bool any = false;
    for (const auto &cycle : cycles(perm)) {
        if (cycle.size() < 2) {
            continue;
        }
        any = true;
        out << '(';
        for (size_t j = 0; j < cycle.size(); j++) {
            out << (j ? " " : "") << cycle[j] + 1;
        }
        out << ')';
    }
    return any ? out.str() : "()";
}

Permutation compose(const Permutation &a, const Permutation &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("permutation size mismatch");
    }
    Permutation result(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        result[i] = a[b[i]];
    }
    return result;
}

SymplecticMatrix permutation_matrix(const Permutation &perm) {
    validate_permutation(perm);
    size_t n = perm.size();
    BitMatrix m(2 * n, 2 * n);
    for (size_t i = 0; i < n; i++) {
        m.set(perm[i], i, true);
        m.set(n + perm[i], n + i, true);
    }
    return SymplecticMatrix(std::move(m));
}

Partition Partition::create(size_t n, std::vector<std::vector<size_t>> blocks) {
    Partition part;
    part.n_ = n;
    part.block_of_.assign(n, SIZE_MAX);
    for (size_t b = 0; b < blocks.size(); b++) {
        if (blocks[b].empty()) {
            throw std::invalid_argument("partition block " + std::to_string(b + 1) + " is empty");
        }
        std::sort(blocks[b].begin(), blocks[b].end());
        for (size_t q : blocks[b]) {
            if (q >= n) {
                throw std::invalid_argument("partition mentions qubit " + std::to_string(q + 1) + " of " + std::to_string(n));
            }
            if (part.block_of_[q] != SIZE_MAX) {
                throw std::invalid_argument("partition blocks overlap at qubit " + std::to_string(q + 1));
            }
            part.block_of_[q] = b;
        }
    }
    for (size_t q = 0; q < n; q++) {
        if (part.block_of_[q] == SIZE_MAX) {
            throw std::invalid_argument("partition does not cover qubit " + std::to_string(q + 1));
        }
    }
    part.blocks_ = std::move(blocks);
    return part;
}

Partition Partition::singletons(size_t n) {
    std::vector<std::vector<size_t>> blocks;
    for (size_t q = 0; q < n; q++) {
        blocks.push_back({q});
    }
    return create(n, std::move(blocks));
}

size_t Partition::fold() const noexcept {
    size_t f = 0;
    for (const auto &b : blocks_) {
        f = std::max(f, b.size());
    }
    return f;
}

std::string Partition::str() const {
    std::ostringstream out;
    for (size_t b = 0; b < blocks_.size(); b++) {
        if (b) {
            out << '/';
        }
        for (size_t j = 0; j < blocks_[b].size(); j++) {
            out << (j ? "," : "") << blocks_[b][j] + 1;
        }
    }
    return out.str();
}

ZXDuality::ZXDuality(Permutation tau) : tau_(std::move(tau)) {
    validate_permutation(tau_);
    for (size_t i = 0; i < tau_.size(); i++) {
        if (tau_[tau_[i]] != i) {
            throw std::invalid_argument("ZX duality must be an involution; qubit " + std::to_string(i + 1) + " is in a longer cycle");
        }
    }
}

Partition ZXDuality::orbits() const { return Partition::create(tau_.size(), cycles(tau_)); }

void Automorphism::validate() const {
    validate_permutation(perm);
    if (locals.size() != perm.size()) {
        throw std::invalid_argument(
            "automorphism has " + std::to_string(locals.size()) + " locals for " + std::to_string(perm.size()) + " qubits");
    }
}

Automorphism Automorphism::identity(size_t n) { return {identity_permutation(n), std::vector<LocalClifford>(n, LocalClifford::I)}; }

Automorphism Automorphism::transversal(std::vector<LocalClifford> locals) {
    size_t n = locals.size();
    return {identity_permutation(n), std::move(locals)};
}

Automorphism Automorphism::permutation(Permutation perm) {
    size_t n = perm.size();
    return {std::move(perm), std::vector<LocalClifford>(n, LocalClifford::I)};
}

Automorphism operator*(const Automorphism &a, const Automorphism &b) {
    a.validate();
    b.validate();
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("automorphism size mismatch");
    }
    // P_a L_a P_b L_b = P_a P_b (P_b^-1 L_a P_b) L_b, and P_b^-1 L_a P_b has
    // local L_a[perm_b[i]] on qubit i.
    Automorphism result;
    result.perm = compose(a.perm, b.perm);
    result.locals.resize(a.num_qubits());
    for (size_t i = 0; i < a.num_qubits(); i++) {
        result.locals[i] = a.locals[b.perm[i]] * b.locals[i];
    }
    return result;
}

Automorphism inverse(const Automorphism &a) {
    a.validate();
    // (P L)^-1 = L^-1 P^-1 = P^-1 (P L^-1 P^-1); the conjugated local at qubit
    // i is L^-1 at perm^-1[i].
    size_t n = a.num_qubits();
    Automorphism result;
    result.perm.resize(n);
    for (size_t i = 0; i < n; i++) {
        result.perm[a.perm[i]] = i;
    }
    result.locals.resize(n);
    for (size_t i = 0; i < n; i++) {
        result.locals[a.perm[i]] = inverse(a.locals[i]);
    }
    return result;
}

SymplecticMatrix aut_to_symplectic(const Automorphism &a) {
    a.validate();
    size_t n = a.num_qubits();
    // Column i of P L: the local on qubit i, relabelled to qubit perm[i].
    BitMatrix m(2 * n, 2 * n);
    for (size_t i = 0; i < n; i++) {
        const SymplecticMatrix &g = local_matrix(a.locals[i]);
        size_t j = a.perm[i];
        m.set(j, i, g.get(0, 0));
        m.set(j, n + i, g.get(0, 1));
        m.set(n + j, i, g.get(1, 0));
        m.set(n + j, n + i, g.get(1, 1));
    }
    return SymplecticMatrix(std::move(m));
}

uint64_t aut_order_from_cycles(const Automorphism &a) {
    a.validate();
    uint64_t order = 1;
    for (const auto &cycle : cycles(a.perm)) {
        LocalClifford around = LocalClifford::I;
        for (size_t q : cycle) {
            around = a.locals[q] * around;
        }
        order = lcm_u64(order, cycle.size() * local_order(around));
    }
    return order;
}

uint64_t aut_order(const Automorphism &a) {
    uint64_t order = element_order(aut_to_symplectic(a));
    if (order != aut_order_from_cycles(a)) {
        throw std::logic_error("automorphism order disagrees with its cycle structure");
    }
    return order;
}

bool is_p_local(const Automorphism &a, uint64_t p) {
    if (p <= 3 || !is_prime(p)) {
        throw std::invalid_argument("p-locality needs a prime p > 3, got " + std::to_string(p));
    }
    a.validate();
    bool has_p_cycle = false;
    for (const auto &cycle : cycles(a.perm)) {
        if (cycle.size() == 1) {
            if (a.locals[cycle[0]] != LocalClifford::I) {
                return false;
            }
        } else if (cycle.size() == p) {
            has_p_cycle = true;
        } else {
            return false;
        }
    }
    return has_p_cycle;
}

PermutationConjugation conjugate_to_permutation(const Automorphism &a) {
    a.validate();
    auto cs = cycles(a.perm);
    uint64_t p = 0;
    for (const auto &cycle : cs) {
        if (cycle.size() > 1) {
            p = cycle.size();
            break;
        }
    }
    if (p <= 3 || !is_prime(p) || !is_p_local(a, p)) {
        throw std::invalid_argument("automorphism is not p-local for a prime p > 3");
    }
    size_t n = a.num_qubits();
    Automorphism v = Automorphism::identity(n);
    for (const auto &cycle : cs) {
        LocalClifford acc = LocalClifford::I;
        for (size_t j = 0; j < cycle.size(); j++) {
            v.locals[cycle[j]] = acc;
            acc = a.locals[cycle[j]] * acc;
        }
        if (acc != LocalClifford::I) {
            throw std::invalid_argument(
                "locals around the cycle through qubit " + std::to_string(cycle[0] + 1) +
                " do not multiply to the identity, so the order is not " + std::to_string(p));
        }
    }
    SymplecticMatrix vm = aut_to_symplectic(v);
    SymplecticMatrix conjugated = vm.inverse() * aut_to_symplectic(a) * vm;
    if (!(conjugated == permutation_matrix(a.perm))) {
        throw std::logic_error("conjugation did not produce a bare permutation");
    }
    return {std::move(v), a.perm, p};
}

std::vector<std::vector<bool>> coupling_graph(const SymplecticMatrix &m) {
    size_t n = m.num_qubits();
    std::vector<std::vector<bool>> coupled(n, std::vector<bool>(n, false));
    for (size_t r = 0; r < 2 * n; r++) {
        size_t qr = r % n;
        const BitVec &row = m.matrix().row(r);
        for (size_t c = row.find_next(0); c < 2 * n; c = row.find_next(c + 1)) {
            size_t qc = c % n;
            if (qr != qc) {
                coupled[qr][qc] = true;
                coupled[qc][qr] = true;
            }
        }
    }
    return coupled;
}

bool is_kfold(const SymplecticMatrix &m, const Partition &part) {
    if (m.num_qubits() != part.num_qubits()) {
        throw std::invalid_argument(
            "partition covers " + std::to_string(part.num_qubits()) + " qubits but the gadget acts on " +
            std::to_string(m.num_qubits()));
    }
    auto coupled = coupling_graph(m);
    const auto &block = part.block_of();
    for (size_t i = 0; i < coupled.size(); i++) {
        for (size_t j = i + 1; j < coupled.size(); j++) {
            if (coupled[i][j] && block[i] != block[j]) {
                return false;
            }
        }
    }
    return true;
}

FoldResult min_fold(const SymplecticMatrix &m) {
    size_t n = m.num_qubits();
    auto coupled = coupling_graph(m);
    std::vector<size_t> comp(n, SIZE_MAX);
    std::vector<std::vector<size_t>> blocks;
    for (size_t start = 0; start < n; start++) {
        if (comp[start] != SIZE_MAX) {
            continue;
        }
        std::vector<size_t> block;
        std::vector<size_t> stack = {start};
        comp[start] = blocks.size();
        while (!stack.empty()) {
            size_t q = stack.back();
            stack.pop_back();
            block.push_back(q);
            for (size_t j = 0; j < n; j++) {
                if (coupled[q][j] && comp[j] == SIZE_MAX) {
                    comp[j] = blocks.size();
                    stack.push_back(j);
                }
            }
        }
        blocks.push_back(std::move(block));
    }
    Partition part = Partition::create(n, std::move(blocks));
    return {part.fold(), part};
}

bool is_fold_transversal(const SymplecticMatrix &m, const ZXDuality &tau) { return is_kfold(m, tau.orbits()); }

SymplecticMatrix bell_matrix() { return SymplecticMatrix::from_strings({"1101", "0101", "1010", "1110"}); }

bool bell_anticommutation_check() {
    SymplecticMatrix bell = bell_matrix();
    PauliVec iz = PauliVec::parse("IZ");
    PauliVec image = iz;
    bool all = true;
    for (int m = 1; m <= 4; m++) {
        image = bell.apply(image);
        all = all && symplectic_product(image, iz);
    }
    return all;
}

}  // namespace nogo
