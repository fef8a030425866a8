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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nogo {

/// Dense vector over F2, packed into 64-bit words.
///
/// Bits past size() in the last word are always zero, so word-level
/// comparisons and hashing are well defined.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t num_bits);

    /// Parses a string of '0'/'1' characters. Throws std::invalid_argument
    /// naming the offending position.
    static BitVec from_string(std::string_view text);
    /// Low `num_bits` bits of `bits`, bit i of the integer at index i.
    static BitVec from_u64(uint64_t bits, size_t num_bits);

    size_t size() const noexcept { return num_bits_; }
    bool empty() const noexcept { return num_bits_ == 0; }

    bool operator[](size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool value) noexcept {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(size_t i) noexcept { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    BitVec &operator|=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec &b) { return a &= b; }

    bool any() const noexcept;
    size_t popcount() const noexcept;
    /// Parity of the bitwise AND, i.e. the standard dot product over F2.
    bool dot(const BitVec &other) const;
    /// Index of the lowest set bit at or after `start`, or size() if none.
    size_t find_next(size_t start = 0) const noexcept;

    /// Copies bits [start, start + len) into a new vector.
    BitVec slice(size_t start, size_t len) const;
    /// Low 64 bits as an integer. Requires size() <= 64.
    uint64_t to_u64() const;

    std::span<const uint64_t> words() const noexcept { return words_; }

    std::string str() const;

    bool operator==(const BitVec &other) const = default;
    std::strong_ordering operator<=>(const BitVec &other) const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

std::ostream &operator<<(std::ostream &out, const BitVec &v);

}  // namespace nogo

template <>
struct std::hash<nogo::BitVec> {
    size_t operator()(const nogo::BitVec &v) const noexcept;
};
