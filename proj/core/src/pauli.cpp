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

#include "nogo/pauli.hpp"

#include <stdexcept>
#include <utility>

namespace nogo {

PauliVec::PauliVec(BitVec bits) : bits_(std::move(bits)) {
    if (bits_.size() % 2) {
        throw std::invalid_argument("Pauli bit vector must have even length");
    }
}

PauliVec PauliVec::parse(std::string_view text) {
    PauliVec result(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                result.set_x(q, true);
                break;
            case 'Z':
                result.set_z(q, true);
                break;
            case 'Y':
                result.set_x(q, true);
                result.set_z(q, true);
                break;
            default:
                throw std::invalid_argument(
                    "invalid Pauli character '" + std::string(1, text[q]) + "' at column " + std::to_string(q + 1));
        }
    }
    return result;
}

size_t PauliVec::weight() const noexcept {
    size_t w = 0;
    for (size_t q = 0; q < num_qubits(); q++) {
        w += x(q) || z(q);
    }
    return w;
}

std::string PauliVec::str() const {
    static constexpr char kChars[] = {'I', 'X', 'Z', 'Y'};
    std::string out(num_qubits(), 'I');
    for (size_t q = 0; q < num_qubits(); q++) {
        out[q] = kChars[x(q) | (z(q) << 1)];
    }
    return out;
}

bool symplectic_form(const BitVec &u, const BitVec &v) {
    if (u.size() != v.size() || u.size() % 2) {
        throw std::invalid_argument(
            "symplectic product needs equal even lengths, got " + std::to_string(u.size()) + " and " +
            std::to_string(v.size()));
    }
    size_t n = u.size() / 2;
    bool acc = false;
    for (size_t i = u.find_next(0); i < u.size(); i = u.find_next(i + 1)) {
        acc ^= v[i < n ? i + n : i - n];
    }
    return acc;
}

bool symplectic_product(const PauliVec &u, const PauliVec &v) { return symplectic_form(u.bits(), v.bits()); }

}  // namespace nogo
