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

#include "nogo/number_theory.hpp"

#include <stdexcept>
#include <string>

namespace nogo {

bool is_prime(uint64_t n) noexcept {
    if (n < 2) {
        return false;
    }
    for (uint64_t d : {2ull, 3ull, 5ull}) {
        if (n % d == 0) {
            return n == d;
        }
    }
    for (uint64_t d = 7; d <= n / d; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<PrimePower> factorize(uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("cannot factorize zero");
    }
    std::vector<PrimePower> result;
    auto take = [&](uint64_t d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            e++;
        }
        if (e) {
            result.push_back({d, e});
        }
    };
    take(2);
    for (uint64_t d = 3; d <= n / d; d += 2) {
        take(d);
    }
    if (n > 1) {
        result.push_back({n, 1});
    }
    return result;
}

uint64_t checked_pow(uint64_t base, unsigned exponent) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < exponent; i++) {
        acc *= base;
        if (acc > UINT64_MAX) {
            throw std::overflow_error(
                std::to_string(base) + "^" + std::to_string(exponent) + " does not fit in 64 bits");
        }
    }
    return static_cast<uint64_t>(acc);
}

uint64_t gcd_u64(uint64_t a, uint64_t b) noexcept {
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

uint64_t lcm_u64(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    unsigned __int128 l = static_cast<unsigned __int128>(a / gcd_u64(a, b)) * b;
    if (l > UINT64_MAX) {
        throw std::overflow_error("lcm does not fit in 64 bits");
    }
    return static_cast<uint64_t>(l);
}

}  // namespace nogo
