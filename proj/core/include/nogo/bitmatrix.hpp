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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nogo/bitvec.hpp"

namespace nogo {

/// Dense matrix over F2 stored as packed rows.
///
/// Matrices act on column vectors: apply(v) returns M·v.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t num_rows, size_t num_cols);

    static BitMatrix identity(size_t n);
    /// All rows must have the same length.
    static BitMatrix from_rows(std::vector<BitVec> rows);
    static BitMatrix from_strings(std::span<const std::string_view> rows);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    size_t num_rows() const noexcept { return rows_.size(); }
    size_t num_cols() const noexcept { return num_cols_; }
    bool is_square() const noexcept { return num_rows() == num_cols_; }

    bool get(size_t r, size_t c) const noexcept { return rows_[r][c]; }
    void set(size_t r, size_t c, bool value) noexcept { rows_[r].set(c, value); }
    const BitVec &row(size_t r) const noexcept { return rows_[r]; }
    BitVec &row(size_t r) noexcept { return rows_[r]; }
    std::span<const BitVec> rows() const noexcept { return rows_; }
    BitVec column(size_t c) const;

    BitMatrix operator*(const BitMatrix &rhs) const;
    BitMatrix &operator+=(const BitMatrix &rhs);
    BitVec apply(const BitVec &v) const;
    BitMatrix transpose() const;
    /// Square-and-multiply power of a square matrix.
    BitMatrix pow(uint64_t exponent) const;
    bool is_identity() const noexcept;
    bool is_zero() const noexcept;

    BitMatrix block(size_t row0, size_t col0, size_t num_rows, size_t num_cols) const;
    void set_block(size_t row0, size_t col0, const BitMatrix &sub);

    /// One line of '0'/'1' per row, each terminated by '\n'.
    std::string str() const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    size_t num_cols_ = 0;
    std::vector<BitVec> rows_;
};

std::ostream &operator<<(std::ostream &out, const BitMatrix &m);

/// Reduced row echelon form.
struct RowEchelon {
    BitMatrix reduced;
    std::vector<size_t> pivot_cols;  ///< one per nonzero row, ascending
    size_t rank() const noexcept { return pivot_cols.size(); }
};

RowEchelon row_reduce(const BitMatrix &m);
size_t rank(const BitMatrix &m);
/// Gauss-Jordan inverse; nullopt when singular.
std::optional<BitMatrix> inverse(const BitMatrix &m);
/// Some x with A·x = b, or nullopt when inconsistent.
std::optional<BitVec> solve(const BitMatrix &a, const BitVec &b);

/// Span of a set of vectors with fast membership tests.
class RowSpace {
   public:
    explicit RowSpace(const BitMatrix &generators);

    size_t dimension() const noexcept { return basis_.size(); }
    /// Residue of v after eliminating every pivot of the basis.
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec &v) const { return !reduce(v).any(); }
    bool contains_all(const BitMatrix &m) const;
    bool operator==(const RowSpace &other) const;

   private:
    size_t num_cols_;
    std::vector<BitVec> basis_;
    std::vector<size_t> pivots_;
};

}  // namespace nogo
