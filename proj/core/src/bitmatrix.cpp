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

#include "nogo/bitmatrix.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace nogo {

BitMatrix::BitMatrix(size_t num_rows, size_t num_cols) : num_cols_(num_cols), rows_(num_rows, BitVec(num_cols)) {}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVec> rows) {
    BitMatrix m;
    if (rows.empty()) {
        return m;
    }
    m.num_cols_ = rows[0].size();
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != m.num_cols_) {
            throw std::invalid_argument(
                "row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) + " columns, expected " +
                std::to_string(m.num_cols_));
        }
    }
    m.rows_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string_view> rows) {
    std::vector<BitVec> parsed;
    parsed.reserve(rows.size());
    for (size_t r = 0; r < rows.size(); r++) {
        try {
            parsed.push_back(BitVec::from_string(rows[r]));
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("row " + std::to_string(r + 1) + ": " + e.what());
        }
    }
    return from_rows(std::move(parsed));
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    return from_strings(std::span<const std::string_view>(rows.begin(), rows.size()));
}

BitVec BitMatrix::column(size_t c) const {
    BitVec result(num_rows());
    for (size_t r = 0; r < num_rows(); r++) {
        if (rows_[r][c]) {
            result.set(r, true);
        }
    }
    return result;
}

BitMatrix BitMatrix::operator*(const BitMatrix &rhs) const {
    if (num_cols_ != rhs.num_rows()) {
        throw std::invalid_argument(
            "matrix product dimension mismatch: " + std::to_string(num_rows()) + "x" + std::to_string(num_cols_) +
            " times " + std::to_string(rhs.num_rows()) + "x" + std::to_string(rhs.num_cols()));
    }
    BitMatrix result(num_rows(), rhs.num_cols());
    for (size_t r = 0; r < num_rows(); r++) {
        const BitVec &lhs_row = rows_[r];
        BitVec &out = result.rows_[r];
        for (size_t k = lhs_row.find_next(0); k < num_cols_; k = lhs_row.find_next(k + 1)) {
            out ^= rhs.rows_[k];
        }
    }
    return result;
}

BitMatrix &BitMatrix::operator+=(const BitMatrix &rhs) {
    if (num_rows() != rhs.num_rows() || num_cols_ != rhs.num_cols_) {
        throw std::invalid_argument("matrix sum dimension mismatch");
    }
    for (size_t r = 0; r < num_rows(); r++) {
        rows_[r] ^= rhs.rows_[r];
    }
    return *this;
}

BitVec BitMatrix::apply(const BitVec &v) const {
    if (v.size() != num_cols_) {
        throw std::invalid_argument(
            "matrix-vector dimension mismatch: " + std::to_string(num_cols_) + " columns vs vector of " +
            std::to_string(v.size()));
    }
    BitVec result(num_rows());
    for (size_t r = 0; r < num_rows(); r++) {
        if (rows_[r].dot(v)) {
            result.set(r, true);
        }
    }
    return result;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix result(num_cols_, num_rows());
    for (size_t r = 0; r < num_rows(); r++) {
        const BitVec &row = rows_[r];
        for (size_t c = row.find_next(0); c < num_cols_; c = row.find_next(c + 1)) {
            result.set(c, r, true);
        }
    }
    return result;
}

BitMatrix BitMatrix::pow(uint64_t exponent) const {
    if (!is_square()) {
        throw std::invalid_argument("matrix power requires a square matrix");
    }
    BitMatrix result = identity(num_rows());
    BitMatrix base = *this;
    while (exponent) {
        if (exponent & 1) {
            result = result * base;
        }
        exponent >>= 1;
        if (exponent) {
            base = base * base;
        }
    }
    return result;
}

bool BitMatrix::is_identity() const noexcept {
    if (!is_square()) {
        return false;
    }
    for (size_t r = 0; r < num_rows(); r++) {
        if (rows_[r].popcount() != 1 || !rows_[r][r]) {
            return false;
        }
    }
    return true;
}

bool BitMatrix::is_zero() const noexcept {
    for (const auto &row : rows_) {
        if (row.any()) {
            return false;
        }
    }
    return true;
}

BitMatrix BitMatrix::block(size_t row0, size_t col0, size_t nr, size_t nc) const {
    if (row0 + nr > num_rows() || col0 + nc > num_cols_) {
        throw std::out_of_range("matrix block out of range");
    }
    BitMatrix result(nr, nc);
    for (size_t r = 0; r < nr; r++) {
        result.rows_[r] = rows_[row0 + r].slice(col0, nc);
    }
    return result;
}

void BitMatrix::set_block(size_t row0, size_t col0, const BitMatrix &sub) {
    if (row0 + sub.num_rows() > num_rows() || col0 + sub.num_cols() > num_cols_) {
        throw std::out_of_range("matrix block out of range");
    }
    for (size_t r = 0; r < sub.num_rows(); r++) {
        for (size_t c = 0; c < sub.num_cols(); c++) {
            set(row0 + r, col0 + c, sub.get(r, c));
        }
    }
}

std::string BitMatrix::str() const {
    std::string out;
    out.reserve(num_rows() * (num_cols_ + 1));
    for (const auto &row : rows_) {
        out += row.str();
        out += '\n';
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const BitMatrix &m) { return out << m.str(); }

RowEchelon row_reduce(const BitMatrix &m) {
    RowEchelon result{m, {}};
    BitMatrix &a = result.reduced;
    size_t pivot_row = 0;
    for (size_t c = 0; c < a.num_cols() && pivot_row < a.num_rows(); c++) {
        size_t found = pivot_row;
        while (found < a.num_rows() && !a.get(found, c)) {
            found++;
        }
        if (found == a.num_rows()) {
            continue;
        }
        std::swap(a.row(found), a.row(pivot_row));
        for (size_t r = 0; r < a.num_rows(); r++) {
            if (r != pivot_row && a.get(r, c)) {
                a.row(r) ^= a.row(pivot_row);
            }
        }
        result.pivot_cols.push_back(c);
        pivot_row++;
    }
    return result;
}

size_t rank(const BitMatrix &m) { return row_reduce(m).rank(); }

std::optional<BitMatrix> inverse(const BitMatrix &m) {
    if (!m.is_square()) {
        throw std::invalid_argument("inverse requires a square matrix");
    }
    size_t n = m.num_rows();
    BitMatrix work = m;
    BitMatrix inv = BitMatrix::identity(n);
    for (size_t c = 0; c < n; c++) {
        size_t found = c;
        while (found < n && !work.get(found, c)) {
            found++;
        }
        if (found == n) {
            return std::nullopt;
        }
        std::swap(work.row(found), work.row(c));
        std::swap(inv.row(found), inv.row(c));
        for (size_t r = 0; r < n; r++) {
            if (r != c && work.get(r, c)) {
                work.row(r) ^= work.row(c);
                inv.row(r) ^= inv.row(c);
            }
        }
    }
    return inv;
}

std::optional<BitVec> solve(const BitMatrix &a, const BitVec &b) {
    if (b.size() != a.num_rows()) {
        throw std::invalid_argument("solve: right-hand side length does not match row count");
    }
    // Row-reduce the augmented matrix [A | b].
    size_t cols = a.num_cols();
    BitMatrix aug(a.num_rows(), cols + 1);
    for (size_t r = 0; r < a.num_rows(); r++) {
        for (size_t c = a.row(r).find_next(0); c < cols; c = a.row(r).find_next(c + 1)) {
            aug.set(r, c, true);
        }
        aug.set(r, cols, b[r]);
    }
    RowEchelon ech = row_reduce(aug);
    BitVec x(cols);
    for (size_t i = 0; i < ech.rank(); i++) {
        size_t pc = ech.pivot_cols[i];
        if (pc == cols) {
            return std::nullopt;
        }
        x.set(pc, ech.reduced.get(i, cols));
    }
    return x;
}

RowSpace::RowSpace(const BitMatrix &generators) : num_cols_(generators.num_cols()) {
    RowEchelon ech = row_reduce(generators);
    for (size_t i = 0; i < ech.rank(); i++) {
        basis_.push_back(ech.reduced.row(i));
        pivots_.push_back(ech.pivot_cols[i]);
    }
}

BitVec RowSpace::reduce(BitVec v) const {
    if (v.size() != num_cols_) {
        throw std::invalid_argument("row space membership: vector length mismatch");
    }
    for (size_t i = 0; i < basis_.size(); i++) {
        if (v[pivots_[i]]) {
            v ^= basis_[i];
        }
    }
    return v;
}

bool RowSpace::contains_all(const BitMatrix &m) const {
    for (const auto &row : m.rows()) {
        if (!contains(row)) {
            return false;
        }
    }
    return true;
}

bool RowSpace::operator==(const RowSpace &other) const {
    return num_cols_ == other.num_cols_ && basis_ == other.basis_;
}

}  // namespace nogo
