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

#include "nogo/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nogo {

namespace {

using Coeffs = std::vector<uint32_t>;

uint32_t mulmod(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
}

uint32_t submod(uint32_t a, uint32_t b, uint32_t p) { return a >= b ? a - b : a + (p - b); }

uint32_t invmod(uint32_t a, uint32_t p) {
    // Fermat; p is prime and a != 0.
    uint64_t result = 1;
    uint64_t base = a % p;
    uint64_t e = p - 2;
    while (e) {
        if (e & 1) {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(result);
}

void trim(Coeffs &a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

/// Remainder of `a` modulo `f` (f need not be monic, but must be nonzero).
Coeffs poly_rem(Coeffs a, const Coeffs &f, uint32_t p) {
    trim(a);
    size_t df = f.size() - 1;
    uint32_t lead_inv = invmod(f.back(), p);
    while (a.size() > df) {
        size_t shift = a.size() - 1 - df;
        uint32_t c = mulmod(a.back(), lead_inv, p);
        for (size_t j = 0; j <= df; j++) {
            a[shift + j] = submod(a[shift + j], mulmod(c, f[j], p), p);
        }
        trim(a);
    }
    return a;
}

Coeffs poly_mulmod(const Coeffs &a, const Coeffs &b, const Coeffs &f, uint32_t p) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Coeffs prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); i++) {
        if (!a[i]) {
            continue;
        }
        for (size_t j = 0; j < b.size(); j++) {
            prod[i + j] = static_cast<uint32_t>((prod[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
        }
    }
    return poly_rem(std::move(prod), f, p);
}

Coeffs poly_powmod(Coeffs base, uint64_t e, const Coeffs &f, uint32_t p) {
    Coeffs result{1};
    base = poly_rem(std::move(base), f, p);
    while (e) {
        if (e & 1) {
            result = poly_mulmod(result, base, f, p);
        }
        e >>= 1;
        if (e) {
            base = poly_mulmod(base, base, f, p);
        }
    }
    return result;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Coeffs r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

void require_prime(uint32_t p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    }
}

/// p^m as a 64-bit count, or an error when the enumeration would not fit.
uint64_t candidate_count(uint32_t p, unsigned m) {
    if (m == 0) {
        throw std::invalid_argument("extension degree must be at least 1");
    }
    return checked_pow(p, m);
}

Polynomial monic_from_index(uint64_t index, uint32_t p, unsigned m) {
    Polynomial poly(m + 1, 0);
    for (unsigned i = 0; i < m; i++) {
        poly[i] = static_cast<uint32_t>(index % p);
        index /= p;
    }
    poly[m] = 1;
    return poly;
}

std::string render_terms(const std::vector<uint32_t> &coeffs, std::string_view var) {
    std::string out;
    for (size_t i = coeffs.size(); i-- > 0;) {
        uint32_t c = coeffs[i];
        if (!c) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) {
            out += std::to_string(c);
        }
        out += var;
        if (i > 1) {
            out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string polynomial_to_string(const Polynomial &poly, std::string_view var) { return render_terms(poly, var); }

bool is_irreducible(uint32_t p, const Polynomial &poly) {
    require_prime(p);
    Coeffs f = poly;
    trim(f);
    if (f.size() < 2) {
        return false;
    }
    size_t m = f.size() - 1;
    // f is irreducible iff gcd(x^(p^i) - x, f) = 1 for every i <= m/2.
    Coeffs x_power{0, 1};
    for (size_t i = 1; i <= m / 2; i++) {
        x_power = poly_powmod(x_power, p, f, p);
        Coeffs h = x_power;
        h.resize(std::max<size_t>(h.size(), 2), 0);
        h[1] = submod(h[1], 1, p);
        trim(h);
        if (h.empty()) {
            return false;
        }
        if (poly_gcd(h, f, p).size() > 1) {
            return false;
        }
    }
    return true;
}

Polynomial find_irreducible(uint32_t p, unsigned m) {
    require_prime(p);
    uint64_t count = candidate_count(p, m);
    for (uint64_t index = 0; index < count; index++) {
        Polynomial poly = monic_from_index(index, p, m);
        if (is_irreducible(p, poly)) {
            return poly;
        }
    }
    throw std::logic_error("no irreducible polynomial found");
}

Polynomial find_primitive(uint32_t p, unsigned m) {
    require_prime(p);
    uint64_t count = candidate_count(p, m);
    for (uint64_t index = 0; index < count; index++) {
        Polynomial poly = monic_from_index(index, p, m);
        if (poly[0] == 0 || !is_irreducible(p, poly)) {
            continue;
        }
        auto spec = FieldSpec::create(p, poly);
        if (multiplicative_order(FieldElement::alpha(spec)) == spec->unit_count()) {
            return poly;
        }
    }
    throw std::logic_error("no primitive polynomial found");
}

std::shared_ptr<const FieldSpec> FieldSpec::create(uint32_t p, Polynomial modulus) {
    require_prime(p);
    trim(modulus);
    if (modulus.size() < 2) {
        throw std::invalid_argument("field modulus must have degree at least 1");
    }
    for (uint32_t c : modulus) {
        if (c >= p) {
            throw std::invalid_argument(
                "modulus coefficient " + std::to_string(c) + " is not reduced mod " + std::to_string(p));
        }
    }
    if (modulus.back() != 1) {
        throw std::invalid_argument("field modulus must be monic");
    }
    unsigned m = static_cast<unsigned>(modulus.size() - 1);
    unsigned __int128 q = 1;
    for (unsigned i = 0; i < m; i++) {
        q *= p;
        if (q > (static_cast<unsigned __int128>(1) << 64)) {
            throw std::invalid_argument("field size p^m exceeds 2^64");
        }
    }
    if (!is_irreducible(p, modulus)) {
        throw std::invalid_argument("modulus " + polynomial_to_string(modulus) + " is reducible over F_" + std::to_string(p));
    }
    std::shared_ptr<FieldSpec> spec(new FieldSpec());
    spec->p_ = p;
    spec->m_ = m;
    spec->modulus_ = std::move(modulus);
    spec->unit_count_ = static_cast<uint64_t>(q - 1);
    spec->unit_factors_ = spec->unit_count_ > 1 ? factorize(spec->unit_count_) : std::vector<PrimePower>{};
    return spec;
}

FieldElement::FieldElement(FieldSpecPtr spec, std::vector<uint32_t> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {}

FieldElement FieldElement::zero(FieldSpecPtr spec) {
    size_t m = spec->degree();
    return FieldElement(std::move(spec), std::vector<uint32_t>(m, 0));
}

FieldElement FieldElement::one(FieldSpecPtr spec) {
    FieldElement e = zero(std::move(spec));
    e.coeffs_[0] = 1;
    return e;
}

FieldElement FieldElement::alpha(FieldSpecPtr spec) {
    if (spec->degree() == 1) {
        // alpha is the root of x - c, i.e. the constant c = -modulus[0].
        uint32_t p = spec->characteristic();
        uint32_t c = submod(0, spec->modulus()[0], p);
        return from_coeffs(std::move(spec), {c});
    }
    FieldElement e = zero(std::move(spec));
    e.coeffs_[1] = 1;
    return e;
}

FieldElement FieldElement::from_coeffs(FieldSpecPtr spec, std::vector<uint32_t> coeffs) {
    size_t m = spec->degree();
    uint32_t p = spec->characteristic();
    if (coeffs.size() > m) {
        throw std::invalid_argument("field element has more than m coefficients");
    }
    coeffs.resize(m, 0);
    for (auto &c : coeffs) {
        c %= p;
    }
    return FieldElement(std::move(spec), std::move(coeffs));
}

FieldElement FieldElement::from_bits(FieldSpecPtr spec, uint64_t bits) {
    if (spec->characteristic() != 2) {
        throw std::invalid_argument("from_bits requires characteristic 2");
    }
    std::vector<uint32_t> coeffs(spec->degree(), 0);
    for (size_t i = 0; i < coeffs.size() && i < 64; i++) {
        coeffs[i] = (bits >> i) & 1;
    }
    return FieldElement(std::move(spec), std::move(coeffs));
}

uint64_t FieldElement::to_bits() const {
    if (spec_->characteristic() != 2 || coeffs_.size() > 64) {
        throw std::invalid_argument("to_bits requires characteristic 2 and degree <= 64");
    }
    uint64_t bits = 0;
    for (size_t i = 0; i < coeffs_.size(); i++) {
        bits |= static_cast<uint64_t>(coeffs_[i]) << i;
    }
    return bits;
}

bool FieldElement::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](uint32_t c) { return c == 0; });
}

bool FieldElement::is_one() const noexcept {
    if (coeffs_.empty() || coeffs_[0] != 1) {
        return false;
    }
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](uint32_t c) { return c == 0; });
}

void FieldElement::require_same_field(const FieldElement &other) const {
    if (spec_ != other.spec_ && !(*spec_ == *other.spec_)) {
        throw std::invalid_argument("field elements belong to different fields");
    }
}

FieldElement &FieldElement::operator+=(const FieldElement &rhs) {
    require_same_field(rhs);
    uint32_t p = spec_->characteristic();
    for (size_t i = 0; i < coeffs_.size(); i++) {
        coeffs_[i] = static_cast<uint32_t>((static_cast<uint64_t>(coeffs_[i]) + rhs.coeffs_[i]) % p);
    }
    return *this;
}

FieldElement &FieldElement::operator-=(const FieldElement &rhs) {
    require_same_field(rhs);
    uint32_t p = spec_->characteristic();
    for (size_t i = 0; i < coeffs_.size(); i++) {
        coeffs_[i] = submod(coeffs_[i], rhs.coeffs_[i], p);
    }
    return *this;
}

FieldElement &FieldElement::operator*=(const FieldElement &rhs) {
    require_same_field(rhs);
    Coeffs product = poly_mulmod(coeffs_, rhs.coeffs_, spec_->modulus(), spec_->characteristic());
    product.resize(spec_->degree(), 0);
    coeffs_ = std::move(product);
    return *this;
}

FieldElement FieldElement::operator-() const { return zero(spec_) - *this; }

bool FieldElement::operator==(const FieldElement &other) const {
    return (spec_ == other.spec_ || *spec_ == *other.spec_) && coeffs_ == other.coeffs_;
}

std::string FieldElement::str(std::string_view var) const { return render_terms(coeffs_, var); }

FieldElement pow(const FieldElement &a, uint64_t exponent) {
    FieldElement result = FieldElement::one(a.spec());
    FieldElement base = a;
    while (exponent) {
        if (exponent & 1) {
            result *= base;
        }
        exponent >>= 1;
        if (exponent) {
            base *= base;
        }
    }
    return result;
}

FieldElement inverse(const FieldElement &a) {
    if (a.is_zero()) {
        throw std::domain_error("zero has no multiplicative inverse");
    }
    // a^(q-2) = a^(-1); unit_count() = q - 1.
    uint64_t units = a.spec()->unit_count();
    return units == 1 ? a : pow(a, units - 1);
}

uint64_t multiplicative_order(const FieldElement &a) {
    if (a.is_zero()) {
        throw std::domain_error("zero has no multiplicative order");
    }
    uint64_t order = a.spec()->unit_count();
    for (const auto &[prime, exponent] : a.spec()->unit_count_factors()) {
        for (unsigned j = 0; j < exponent; j++) {
            if (!pow(a, order / prime).is_one()) {
                break;
            }
            order /= prime;
        }
    }
    return order;
}

FieldElement trace(const FieldElement &a, unsigned subfield_degree) {
    unsigned m = a.spec()->degree();
    if (subfield_degree == 0 || m % subfield_degree != 0) {
        throw std::invalid_argument(
            "subfield degree " + std::to_string(subfield_degree) + " does not divide " + std::to_string(m));
    }
    uint64_t frobenius = checked_pow(a.spec()->characteristic(), subfield_degree);
    FieldElement sum = FieldElement::zero(a.spec());
    FieldElement term = a;
    for (unsigned i = 0; i < m / subfield_degree; i++) {
        sum += term;
        term = pow(term, frobenius);
    }
    return sum;
}

uint32_t absolute_trace(const FieldElement &a) {
    FieldElement t = trace(a, 1);
    for (size_t i = 1; i < t.coeffs().size(); i++) {
        if (t.coeffs()[i]) {
            throw std::logic_error("absolute trace left the prime subfield");
        }
    }
    return t.coeffs()[0];
}

}  // namespace nogo
