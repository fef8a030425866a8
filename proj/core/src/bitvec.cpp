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

#include "nogo/bitvec.hpp"

#include <ostream>
#include <stdexcept>

namespace nogo {

namespace {

size_t num_words(size_t num_bits) { return (num_bits + 63) >> 6; }

void require_same_size(const BitVec &a, const BitVec &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(
            "bit vector size mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
}

}  // namespace

BitVec::BitVec(size_t num_bits) : num_bits_(num_bits), words_(num_words(num_bits), 0) {}

BitVec BitVec::from_string(std::string_view text) {
    BitVec result(text.size());
    for (size_t i = 0; i < text.size(); i++) {
        char c = text[i];
        if (c == '1') {
            result.set(i, true);
        } else if (c != '0') {
            throw std::invalid_argument(
                "expected '0' or '1' at column " + std::to_string(i + 1) + " but got '" + std::string(1, c) + "'");
        }
    }
    return result;
}

BitVec BitVec::from_u64(uint64_t bits, size_t num_bits) {
    if (num_bits > 64) {
        throw std::invalid_argument("from_u64 supports at most 64 bits");
    }
    BitVec result(num_bits);
    if (num_bits > 0) {
        result.words_[0] = num_bits == 64 ? bits : bits & ((uint64_t{1} << num_bits) - 1);
    }
    return result;
}

BitVec &BitVec::operator^=(const BitVec &other) {
    require_same_size(*this, other);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    require_same_size(*this, other);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

BitVec &BitVec::operator|=(const BitVec &other) {
    require_same_size(*this, other);
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] |= other.words_[w];
    }
    return *this;
}

bool BitVec::any() const noexcept {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

size_t BitVec::popcount() const noexcept {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::dot(const BitVec &other) const {
    require_same_size(*this, other);
    uint64_t acc = 0;
    for (size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

size_t BitVec::find_next(size_t start) const noexcept {
    if (start >= num_bits_) {
        return num_bits_;
    }
    size_t w = start >> 6;
    uint64_t word = words_[w] & (~uint64_t{0} << (start & 63));
    while (true) {
        if (word) {
            size_t k = (w << 6) + std::countr_zero(word);
            return k < num_bits_ ? k : num_bits_;
        }
        w++;
        if (w >= words_.size()) {
            return num_bits_;
        }
        word = words_[w];
    }
}

BitVec BitVec::slice(size_t start, size_t len) const {
    if (start + len > num_bits_) {
        throw std::out_of_range("bit vector slice out of range");
    }
    BitVec result(len);
    for (size_t i = 0; i < len; i++) {
        if ((*this)[start + i]) {
            result.set(i, true);
        }
    }
    return result;
}

uint64_t BitVec::to_u64() const {
    if (num_bits_ > 64) {
        throw std::invalid_argument("to_u64 requires at most 64 bits");
    }
    return words_.empty() ? 0 : words_[0];
}

std::string BitVec::str() const {
    std::string result(num_bits_, '0');
    for (size_t i = 0; i < num_bits_; i++) {
        if ((*this)[i]) {
            result[i] = '1';
        }
    }
    return result;
}

std::strong_ordering BitVec::operator<=>(const BitVec &other) const {
    if (auto c = num_bits_ <=> other.num_bits_; c != 0) {
        return c;
    }
    return words_ <=> other.words_;
}

std::ostream &operator<<(std::ostream &out, const BitVec &v) { return out << v.str(); }

}  // namespace nogo

size_t std::hash<nogo::BitVec>::operator()(const nogo::BitVec &v) const noexcept {
    uint64_t h = 0x9E3779B97F4A7C15ull ^ v.size();
    for (uint64_t w : v.words()) {
        h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
}
