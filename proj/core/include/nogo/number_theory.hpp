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

#include <cstdint>
#include <vector>

namespace nogo {

struct PrimePower {
    uint64_t prime;
    unsigned exponent;
    bool operator==(const PrimePower &) const = default;
};

bool is_prime(uint64_t n) noexcept;

/// Prime factorization by trial division, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(uint64_t n);

/// base^exponent, throwing std::overflow_error if it does not fit in 64 bits.
uint64_t checked_pow(uint64_t base, unsigned exponent);

uint64_t gcd_u64(uint64_t a, uint64_t b) noexcept;
/// Throws std::overflow_error on overflow.
uint64_t lcm_u64(uint64_t a, uint64_t b);

}  // namespace nogo
