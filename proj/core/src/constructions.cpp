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

#include "nogo/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace nogo {

namespace {

void require_k(size_t k, size_t max_k) {
    if (k < 1 || k > max_k) {
        throw std::invalid_argument("k must be in [1, " + std::to_string(max_k) + "], got " + std::to_string(k));
    }
}

uint64_t pow2(size_t e) { return uint64_t{1} << e; }

}  // namespace

uint64_t primitive_prime_divisor(size_t k) {
    require_k(k, 32);
    std::vector<uint64_t> candidates;
    for (uint64_t part : {pow2(k) - 1, pow2(k) + 1}) {
        if (part > 1) {
            for (const auto &pp : factorize(part)) {
                candidates.push_back(pp.prime);
            }
        }
    }
    std::sort(candidates.begin(), candidates.end());
    for (uint64_t p : candidates) {
        bool divides_earlier = false;
        for (size_t i = 1; i < k && !divides_earlier; i++) {
            uint64_t earlier = pow2(2 * i) - 1;
            divides_earlier = earlier % p == 0;
        }
        if (!divides_earlier) {
            return p;
        }
    }
    throw std::logic_error("no primitive prime divisor for k = " + std::to_string(k));
}

BitMatrix companion_matrix(const Polynomial &poly) {
    if (poly.size() < 2) {
        throw std::invalid_argument("companion matrix needs a polynomial of degree >= 1");
    }
    if (poly.back() != 1) {
        throw std::invalid_argument("companion matrix needs a monic polynomial");
    }
    size_t k = poly.size() - 1;
    BitMatrix c(k, k);
    for (size_t i = 0; i < k; i++) {
        if (poly[i] > 1) {
            throw std::invalid_argument("companion matrix needs coefficients over F2");
        }
        if (i > 0) {
            c.set(i, i - 1, true);
        }
        if (poly[i]) {
            c.set(i, k - 1, true);
        }
    }
    return c;
}

TraceForm::TraceForm(FieldSpecPtr field, size_t k, FieldElement theta)
    : field_(std::move(field)), k_(k), frobenius_k_(pow2(k)), theta_(std::move(theta)) {
    if (field_->characteristic() != 2 || field_->degree() != 2 * k) {
        throw std::invalid_argument("trace form needs GF(2^(2k))");
    }
}

bool TraceForm::operator()(const FieldElement &a, const FieldElement &b) const {
    // Characteristic 2: the difference in the form is a sum.
    FieldElement inner = a * pow(b, frobenius_k_) + pow(a, frobenius_k_) * b;
    return absolute_trace(theta_ * inner) != 0;
}

BitMatrix TraceForm::gram(const std::vector<FieldElement> &basis) const {
    BitMatrix g(basis.size(), basis.size());
    for (size_t i = 0; i < basis.size(); i++) {
        for (size_t j = i + 1; j < basis.size(); j++) {
            bool v = (*this)(basis[i], basis[j]);
            g.set(i, j, v);
            g.set(j, i, v);
        }
    }
    return g;
}

bool TraceForm::is_nondegenerate() const { return rank(gram(polynomial_basis(field_))) == 2 * k_; }

std::vector<FieldElement> polynomial_basis(const FieldSpecPtr &field) {
    std::vector<FieldElement> basis;
    for (unsigned i = 0; i < field->degree(); i++) {
        std::vector<uint32_t> coeffs(field->degree(), 0);
        coeffs[i] = 1;
        basis.push_back(FieldElement::from_coeffs(field, std::move(coeffs)));
    }
    return basis;
}

std::vector<FieldElement> symplectic_basis(const TraceForm &form, std::vector<FieldElement> work) {
    std::vector<FieldElement> us;
    std::vector<FieldElement> vs;
    while (!work.empty()) {
        // First vector (by index) that pairs with some later-or-earlier partner.
        size_t ui = work.size();
        size_t vi = work.size();
        for (size_t i = 0; i < work.size() && ui == work.size(); i++) {
            for (size_t j = 0; j < work.size(); j++) {
                if (j != i && form(work[i], work[j])) {
                    ui = i;
                    vi = j;
                    break;
                }
            }
        }
        if (ui == work.size()) {
            throw std::invalid_argument("form is degenerate on the remaining span");
        }
        FieldElement u = work[ui];
        FieldElement v = work[vi];
        std::vector<FieldElement> rest;
        for (size_t i = 0; i < work.size(); i++) {
            if (i == ui || i == vi) {
                continue;
            }
            // Project out the hyperbolic pair: w + B(w, v) u + B(w, u) v.
            FieldElement w = work[i];
            bool bwv = form(w, v);
            bool bwu = form(w, u);
            if (bwv) {
                w += u;
            }
            if (bwu) {
                w += v;
            }
            rest.push_back(std::move(w));
        }
        us.push_back(std::move(u));
        vs.push_back(std::move(v));
        work = std::move(rest);
    }
    us.insert(us.end(), vs.begin(), vs.end());
    return us;
}

bool is_symplectic_basis(const TraceForm &form, const std::vector<FieldElement> &basis) {
    size_t k = form.half_dim();
    if (basis.size() != 2 * k) {
        return false;
    }
    for (size_t i = 0; i < 2 * k; i++) {
        for (size_t j = 0; j < 2 * k; j++) {
            bool expected = (i < k && j == i + k) || (j < k && i == j + k);
            if (form(basis[i], basis[j]) != expected) {
                return false;
            }
        }
    }
    return true;
}

std::string_view to_string(ConstructionKind kind) {
    switch (kind) {
        case ConstructionKind::MinusOne:
            return "v";
        case ConstructionKind::PlusOne:
            return "w";
        case ConstructionKind::PrimeOrder:
            return "prime";
    }
    return "?";
}

OrderConstruction construct_v(size_t k) {
    require_k(k, 31);
    OrderConstruction result;
    result.k = k;
    result.kind = ConstructionKind::MinusOne;
    result.polynomial = find_primitive(2, static_cast<unsigned>(k));

    BitMatrix c = companion_matrix(result.polynomial);
    auto c_inv = inverse(c);
    if (!c_inv) {
        throw std::logic_error("companion matrix of a primitive polynomial is singular");
    }
    BitMatrix v(2 * k, 2 * k);
    v.set_block(0, 0, c);
    v.set_block(k, k, c_inv->transpose());
    result.matrix = SymplecticMatrix(std::move(v));
    result.order = element_order(result.matrix);
    if (result.order != pow2(k) - 1) {
        throw std::logic_error("construct_v produced order " + std::to_string(result.order));
    }
    return result;
}

OrderConstruction construct_w(size_t k, const WOptions &options) {
    require_k(k, 31);
    OrderConstruction result;
    result.k = k;
    result.kind = ConstructionKind::PlusOne;
    result.polynomial = find_primitive(2, static_cast<unsigned>(2 * k));
    FieldSpecPtr field = FieldSpec::create(2, result.polynomial);
    FieldElement alpha = FieldElement::alpha(field);

    std::optional<TraceForm> form;
    if (options.theta_exponent) {
        form.emplace(field, k, pow(alpha, *options.theta_exponent));
        if (!form->is_nondegenerate()) {
            throw std::invalid_argument("theta = alpha^" + std::to_string(*options.theta_exponent) + " gives a degenerate form");
        }
        result.theta_exponent = *options.theta_exponent;
    } else {
        for (uint64_t j = 1; j <= field->unit_count(); j++) {
            TraceForm candidate(field, k, pow(alpha, j));
            if (candidate.is_nondegenerate()) {
                form.emplace(std::move(candidate));
                result.theta_exponent = j;
                break;
            }
        }
        if (!form) {
            throw std::logic_error("no theta makes the trace form non-degenerate");
        }
    }

    std::vector<FieldElement> basis;
    if (options.basis_exponents) {
        for (uint64_t e : *options.basis_exponents) {
            basis.push_back(pow(alpha, e));
        }
        if (!is_symplectic_basis(*form, basis)) {
            throw std::invalid_argument("supplied basis is not symplectic for this form");
        }
    } else {
        basis = symplectic_basis(*form, polynomial_basis(field));
        if (!is_symplectic_basis(*form, basis)) {
            throw std::logic_error("Gram-Schmidt produced an invalid symplectic basis");
        }
    }

    FieldElement t = pow(alpha, pow2(k) - 1);
    for (const auto &b : polynomial_basis(field)) {
        for (const auto &c : polynomial_basis(field)) {
            if ((*form)(t * b, t * c) != (*form)(b, c)) {
                throw std::logic_error("multiplication by t does not preserve the trace form");
            }
        }
    }

    // Coordinates in the symplectic basis: x = sum B(x, v_i) u_i + B(x, u_i) v_i.
    BitMatrix w(2 * k, 2 * k);
    for (size_t col = 0; col < 2 * k; col++) {
        FieldElement image = t * basis[col];
        FieldElement rebuilt = FieldElement::zero(field);
        for (size_t i = 0; i < k; i++) {
            if ((*form)(image, basis[k + i])) {
                w.set(i, col, true);
                rebuilt += basis[i];
            }
            if ((*form)(image, basis[i])) {
                w.set(k + i, col, true);
                rebuilt += basis[k + i];
            }
        }
        if (!(rebuilt == image)) {
            throw std::logic_error("symplectic coordinates do not reproduce the image");
        }
    }

    for (const auto &b : basis) {
        result.basis.push_back(b.to_bits());
    }
    result.multiplier = t.to_bits();
    result.matrix = SymplecticMatrix(std::move(w));
    result.order = element_order(result.matrix);
    if (result.order != pow2(k) + 1) {
        throw std::logic_error("construct_w produced order " + std::to_string(result.order));
    }
    return result;
}

OrderConstruction construct_prime_order(size_t k) {
    require_k(k, 31);
    uint64_t p = primitive_prime_divisor(k);
    bool minus_branch = (pow2(k) - 1) % p == 0;
    OrderConstruction result = minus_branch ? construct_v(k) : construct_w(k);
    uint64_t power = (minus_branch ? pow2(k) - 1 : pow2(k) + 1) / p;
    result.base_kind = result.kind;
    result.kind = ConstructionKind::PrimeOrder;
    result.prime = p;
    result.base_power = power;
    result.matrix = result.matrix.pow(power);
    result.order = element_order(result.matrix);
    if (result.order != p) {
        throw std::logic_error("construct_prime_order produced order " + std::to_string(result.order));
    }
    return result;
}

}  // namespace nogo
