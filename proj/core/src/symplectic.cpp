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

#include "nogo/symplectic.hpp"

#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace nogo {

BitMatrix symplectic_form_matrix(size_t num_qubits) {
    BitMatrix j(2 * num_qubits, 2 * num_qubits);
    for (size_t i = 0; i < num_qubits; i++) {
        j.set(i, num_qubits + i, true);
        j.set(num_qubits + i, i, true);
    }
    return j;
}

bool is_symplectic(const BitMatrix &m) {
    if (!m.is_square()) {
        throw std::invalid_argument(
            "symplectic check needs a square matrix, got " + std::to_string(m.num_rows()) + "x" +
            std::to_string(m.num_cols()));
    }
    if (m.num_rows() % 2) {
        throw std::invalid_argument("symplectic check needs an even dimension, got " + std::to_string(m.num_rows()));
    }
    // (M^T J M)_{ij} is the symplectic form of columns i and j.
    size_t dim = m.num_rows();
    size_t n = dim / 2;
    BitMatrix cols = m.transpose();
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = i; j < dim; j++) {
            bool expected = (j == i + n && i < n);
            if (symplectic_form(cols.row(i), cols.row(j)) != expected) {
                return false;
            }
        }
    }
    return true;
}

SymplecticMatrix::SymplecticMatrix(BitMatrix m) : m_(std::move(m)) {
    if (!is_symplectic(m_)) {
        throw std::invalid_argument("matrix does not satisfy M^T J M = J");
    }
}

SymplecticMatrix SymplecticMatrix::identity(size_t num_qubits) {
    return SymplecticMatrix(BitMatrix::identity(2 * num_qubits), Unchecked{});
}

SymplecticMatrix SymplecticMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    return SymplecticMatrix(BitMatrix::from_strings(rows));
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix &rhs) const {
    return SymplecticMatrix(m_ * rhs.m_, Unchecked{});
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    // J M^T J: swap the X and Z halves of both rows and columns of M^T.
    size_t n = num_qubits();
    BitMatrix t = m_.transpose();
    BitMatrix inv(dim(), dim());
    for (size_t r = 0; r < dim(); r++) {
        size_t src_r = r < n ? r + n : r - n;
        for (size_t c = 0; c < dim(); c++) {
            size_t src_c = c < n ? c + n : c - n;
            if (t.get(src_r, src_c)) {
                inv.set(r, c, true);
            }
        }
    }
    return SymplecticMatrix(std::move(inv), Unchecked{});
}

SymplecticMatrix SymplecticMatrix::pow(uint64_t exponent) const {
    return SymplecticMatrix(m_.pow(exponent), Unchecked{});
}

SymplecticMatrix SymplecticMatrix::pow_signed(int64_t exponent) const {
    if (exponent >= 0) {
        return pow(static_cast<uint64_t>(exponent));
    }
    return inverse().pow(static_cast<uint64_t>(-(exponent + 1)) + 1);
}

std::ostream &operator<<(std::ostream &out, const SymplecticMatrix &m) { return out << m.matrix(); }

BigUint group_order(size_t k) {
    BigUint result = 1;
    result <<= k * k;
    BigUint four_pow = 1;
    for (size_t i = 1; i <= k; i++) {
        four_pow *= 4;
        result *= four_pow - 1;
    }
    return result;
}

std::vector<PrimePower> group_order_factors(size_t k) {
    if (k > 63) {
        throw std::invalid_argument("group order factorization supports k <= 63");
    }
    std::map<uint64_t, unsigned> exps;
    if (k > 0) {
        exps[2] = static_cast<unsigned>(k * k);
    }
    for (size_t i = 1; i <= k; i++) {
        // 4^i - 1 = (2^i - 1)(2^i + 1)
        uint64_t lo = (uint64_t{1} << i) - 1;
        uint64_t hi = (uint64_t{1} << i) + 1;
        for (uint64_t part : {lo, hi}) {
            if (part > 1) {
                for (const auto &pp : factorize(part)) {
                    exps[pp.prime] += pp.exponent;
                }
            }
        }
    }
    std::vector<PrimePower> result;
    for (const auto &[prime, e] : exps) {
        result.push_back({prime, e});
    }
    return result;
}

namespace {

SymplecticMatrix pow_prime_power(SymplecticMatrix m, uint64_t prime, unsigned exponent) {
    for (unsigned i = 0; i < exponent && !m.is_identity(); i++) {
        m = m.pow(prime);
    }
    return m;
}

}  // namespace

uint64_t element_order(const SymplecticMatrix &m) {
    if (m.dim() == 0) {
        return 1;
    }
    std::vector<PrimePower> factors = group_order_factors(m.num_qubits());
    uint64_t order = 1;
    for (size_t i = 0; i < factors.size(); i++) {
        // Project onto the p-part: raise to every other prime power dividing |G|.
        SymplecticMatrix part = m;
        for (size_t j = 0; j < factors.size(); j++) {
            if (j != i) {
                part = pow_prime_power(std::move(part), factors[j].prime, factors[j].exponent);
            }
        }
        unsigned f = 0;
        while (!part.is_identity()) {
            if (f == factors[i].exponent) {
                throw std::logic_error("element order does not divide the symplectic group order");
            }
            part = part.pow(factors[i].prime);
            f++;
        }
        order = checked_pow(factors[i].prime, f) * order;
    }
    if (!m.pow(order).is_identity()) {
        throw std::logic_error("element order computation failed verification");
    }
    return order;
}

SymplecticMatrix embed(const SymplecticMatrix &gate, std::span<const size_t> qubits, size_t num_qubits) {
    size_t m = gate.num_qubits();
    if (qubits.size() != m) {
        throw std::invalid_argument("embed: qubit list length does not match gate size");
    }
    std::vector<bool> used(num_qubits, false);
    for (size_t q : qubits) {
        if (q >= num_qubits || used[q]) {
            throw std::invalid_argument("embed: qubit indices must be distinct and in range");
        }
        used[q] = true;
    }
    auto index = [&](size_t a) { return a < m ? qubits[a] : num_qubits + qubits[a - m]; };
    BitMatrix result = BitMatrix::identity(2 * num_qubits);
    for (size_t a = 0; a < 2 * m; a++) {
        result.set(index(a), index(a), false);
    }
    for (size_t a = 0; a < 2 * m; a++) {
        for (size_t b = 0; b < 2 * m; b++) {
            if (gate.get(a, b)) {
                result.set(index(a), index(b), true);
            }
        }
    }
    return SymplecticMatrix(std::move(result));
}

SymplecticMatrix tensor(std::span<const SymplecticMatrix> gates) {
    size_t total = 0;
    for (const auto &g : gates) {
        total += g.num_qubits();
    }
    SymplecticMatrix result = SymplecticMatrix::identity(total);
    size_t offset = 0;
    for (const auto &g : gates) {
        std::vector<size_t> qubits(g.num_qubits());
        for (size_t i = 0; i < qubits.size(); i++) {
            qubits[i] = offset + i;
        }
        result = embed(g, qubits, total) * result;
        offset += g.num_qubits();
    }
    return result;
}

namespace gates {

SymplecticMatrix hadamard() { return SymplecticMatrix::from_strings({"01", "10"}); }

SymplecticMatrix phase() { return SymplecticMatrix::from_strings({"10", "11"}); }

SymplecticMatrix cnot() { return SymplecticMatrix::from_strings({"1000", "1100", "0011", "0001"}); }

}  // namespace gates

}  // namespace nogo
