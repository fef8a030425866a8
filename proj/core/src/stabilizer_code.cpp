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

#include "nogo/stabilizer_code.hpp"

#include <mutex>
#include <utility>

namespace nogo {

struct StabilizerCode::Cache {
    explicit Cache(const BitMatrix &generators) : row_space(generators) {}

    RowSpace row_space;
    std::once_flag standard_once;
    std::unique_ptr<const StandardFormCode> standard;
};

StabilizerCode StabilizerCode::validate(BitMatrix generators, std::string name, std::optional<int> distance) {
    using Kind = CodeValidationError::Kind;
    if (generators.num_cols() % 2) {
        throw CodeValidationError(
            Kind::OddColumnCount, "generator matrix has an odd number of columns (" +
                                      std::to_string(generators.num_cols()) + ")");
    }
    size_t n = generators.num_cols() / 2;
    if (generators.num_rows() > n) {
        throw CodeValidationError(
            Kind::TooManyRows, std::to_string(generators.num_rows()) + " generators exceed " + std::to_string(n) + " qubits");
    }
    for (size_t a = 0; a < generators.num_rows(); a++) {
        for (size_t b = a + 1; b < generators.num_rows(); b++) {
            if (symplectic_form(generators.row(a), generators.row(b))) {
                throw CodeValidationError(
                    Kind::Anticommuting,
                    "generators " + std::to_string(a + 1) + " (" + PauliVec(generators.row(a)).str() + ") and " +
                        std::to_string(b + 1) + " (" + PauliVec(generators.row(b)).str() + ") anticommute",
                    a, b);
            }
        }
    }
    for (size_t r = 0; r < generators.num_rows(); r++) {
        if (rank(generators.block(0, 0, r + 1, generators.num_cols())) != r + 1) {
            throw CodeValidationError(
                Kind::DependentRow,
                "generator " + std::to_string(r + 1) + " (" + PauliVec(generators.row(r)).str() +
                    ") is a product of earlier generators",
                r);
        }
    }
    StabilizerCode code;
    code.n_ = n;
    code.generators_ = std::move(generators);
    code.name_ = std::move(name);
    code.distance_ = distance;
    code.cache_ = std::make_shared<Cache>(code.generators_);
    return code;
}

StabilizerCode StabilizerCode::from_paulis(const std::vector<std::string> &paulis, std::string name,
                                           std::optional<size_t> num_qubits) {
    std::vector<BitVec> rows;
    for (size_t i = 0; i < paulis.size(); i++) {
        PauliVec p;
        try {
            p = PauliVec::parse(paulis[i]);
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("generator " + std::to_string(i + 1) + ": " + e.what());
        }
        if (!rows.empty() && p.bits().size() != rows.front().size()) {
            throw std::invalid_argument(
                "generator " + std::to_string(i + 1) + " has " + std::to_string(p.num_qubits()) + " qubits, expected " +
                std::to_string(rows.front().size() / 2));
        }
        rows.push_back(p.bits());
    }
    BitMatrix m;
    if (rows.empty()) {
        m = BitMatrix(0, 2 * num_qubits.value_or(0));
    } else {
        if (num_qubits && *num_qubits * 2 != rows.front().size()) {
            throw std::invalid_argument("generator length does not match the declared qubit count");
        }
        m = BitMatrix::from_rows(std::move(rows));
    }
    return validate(std::move(m), std::move(name));
}

const StandardFormCode &StabilizerCode::standard_form() const {
    std::call_once(cache_->standard_once, [this] {
        cache_->standard = std::make_unique<const StandardFormCode>(compute_standard_form(*this));
    });
    return *cache_->standard;
}

const RowSpace &StabilizerCode::row_space() const { return cache_->row_space; }

namespace {

void swap_qubits(BitMatrix &m, size_t n, size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t r = 0; r < m.num_rows(); r++) {
        BitVec &row = m.row(r);
        bool xa = row[a], xb = row[b], za = row[n + a], zb = row[n + b];
        row.set(a, xb);
        row.set(b, xa);
        row.set(n + a, zb);
        row.set(n + b, za);
    }
}

/// Moves a standard-frame vector back to original qubit labels.
BitVec to_original_frame(const BitVec &v, const std::vector<size_t> &perm) {
    size_t n = perm.size();
    BitVec out(2 * n);
    for (size_t p = 0; p < n; p++) {
        out.set(perm[p], v[p]);
        out.set(n + perm[p], v[n + p]);
    }
    return out;
}

BitMatrix to_original_frame(const BitMatrix &m, const std::vector<size_t> &perm) {
    std::vector<BitVec> rows;
    for (const auto &row : m.rows()) {
        rows.push_back(to_original_frame(row, perm));
    }
    BitMatrix result = BitMatrix::from_rows(std::move(rows));
    if (m.num_rows() == 0) {
        result = BitMatrix(0, m.num_cols());
    }
    return result;
}

/// Swaps the X and Z halves, so that A·J·d can be written (AJ)·d.
BitVec swap_halves(const BitVec &v) {
    size_t n = v.size() / 2;
    BitVec out(v.size());
    for (size_t i = 0; i < n; i++) {
        out.set(i, v[n + i]);
        out.set(n + i, v[i]);
    }
    return out;
}

void check(bool condition, const char *what) {
    if (!condition) {
        throw std::logic_error(std::string("standard form invariant violated: ") + what);
    }
}

}  // namespace

StandardFormCode compute_standard_form(const StabilizerCode &code) {
    size_t n = code.num_qubits();
    size_t k = code.num_logical();
    size_t rows = code.num_generators();
    BitMatrix g = code.generators();
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; i++) {
        perm[i] = i;
    }
    auto swap_positions = [&](size_t a, size_t b) {
        swap_qubits(g, n, a, b);
        std::swap(perm[a], perm[b]);
    };

    // X block: bring it to [I_r A | ...] with zero X part below.
    size_t r = 0;
    for (; r < rows; r++) {
        size_t pr = rows, pc = n;
        for (size_t row = r; row < rows && pr == rows; row++) {
            size_t c = g.row(row).find_next(r);
            if (c < n) {
                pr = row;
                pc = c;
            }
        }
        if (pr == rows) {
            break;
        }
        std::swap(g.row(pr), g.row(r));
        swap_positions(pc, r);
        for (size_t row = 0; row < rows; row++) {
            if (row != r && g.get(row, r)) {
                g.row(row) ^= g.row(r);
            }
        }
    }

    // Z block of the remaining rows on qubit positions >= r: [D I E].
    size_t s = rows - r;
    for (size_t i = 0; i < s; i++) {
        size_t target_row = r + i;
        size_t target_pos = r + i;
        size_t pr = rows, pc = n;
        for (size_t row = target_row; row < rows && pr == rows; row++) {
            size_t c = g.row(row).find_next(n + target_pos);
            if (c < 2 * n) {
                pr = row;
                pc = c - n;
            }
        }
        check(pr != rows, "Z block of the X-free rows is rank deficient");
        std::swap(g.row(pr), g.row(target_row));
        swap_positions(pc, target_pos);
        for (size_t row = r; row < rows; row++) {
            if (row != target_row && g.get(row, n + target_pos)) {
                g.row(row) ^= g.row(target_row);
            }
        }
    }

    // Logical representatives from the blocks:
    //   L_x = [0 E^T I | E^T C1^T + C2^T 0 0],  L_z = [0 0 0 | A2^T 0 I].
    size_t lo = r + s;  // first logical column
    BitMatrix a2 = g.block(0, lo, r, k);
    BitMatrix c1 = g.block(0, n + r, r, s);
    BitMatrix c2 = g.block(0, n + lo, r, k);
    BitMatrix e = g.block(r, n + lo, s, k);
    BitMatrix et = e.transpose();
    BitMatrix lx_z = et * c1.transpose();
    lx_z += c2.transpose();

    BitMatrix lx(k, 2 * n);
    BitMatrix lz(k, 2 * n);
    lx.set_block(0, r, et);
    lz.set_block(0, n, a2.transpose());
    for (size_t i = 0; i < k; i++) {
        lx.set(i, lo + i, true);
        lz.set(i, n + lo + i, true);
    }
    lx.set_block(0, n, lx_z);

    StandardFormCode result;
    result.num_qubits = n;
    result.num_logical = k;
    result.x_rank = r;
    result.qubit_permutation = perm;
    result.standard = g;
    result.stabilizers = to_original_frame(g, perm);
    result.logical_x = to_original_frame(lx, perm);
    result.logical_z = to_original_frame(lz, perm);

    // Destabilizers: solve <d_i, s_j> = delta_ij, <d_i, L> = 0 for all logicals.
    std::vector<BitVec> constraint_rows;
    for (const auto &row : result.stabilizers.rows()) {
        constraint_rows.push_back(swap_halves(row));
    }
    for (const auto &row : result.logical_x.rows()) {
        constraint_rows.push_back(swap_halves(row));
    }
    for (const auto &row : result.logical_z.rows()) {
        constraint_rows.push_back(swap_halves(row));
    }
    BitMatrix constraints =
        constraint_rows.empty() ? BitMatrix(0, 2 * n) : BitMatrix::from_rows(std::move(constraint_rows));
    std::vector<BitVec> destab;
    for (size_t i = 0; i < rows; i++) {
        BitVec rhs(constraints.num_rows());
        rhs.set(i, true);
        auto d = solve(constraints, rhs);
        check(d.has_value(), "destabilizer system is inconsistent");
        destab.push_back(std::move(*d));
    }
    // Make destabilizers commute among themselves by adding stabilizers.
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < i; j++) {
            if (symplectic_form(destab[i], destab[j])) {
                destab[i] ^= result.stabilizers.row(j);
            }
        }
    }
    result.destabilizers = destab.empty() ? BitMatrix(0, 2 * n) : BitMatrix::from_rows(std::move(destab));

    // Every duality relation must hold exactly.
    const auto &st = result.stabilizers;
    const auto &ds = result.destabilizers;
    check(RowSpace(st) == code.row_space(), "row space changed");
    for (size_t i = 0; i < k; i++) {
        check(!result.logical_z.row(i).slice(0, n).any(), "logical Z has an X component");
        for (size_t j = 0; j < k; j++) {
            check(symplectic_form(result.logical_x.row(i), result.logical_z.row(j)) == (i == j), "<Lx_i, Lz_j>");
            check(!symplectic_form(result.logical_x.row(i), result.logical_x.row(j)), "<Lx_i, Lx_j>");
            check(!symplectic_form(result.logical_z.row(i), result.logical_z.row(j)), "<Lz_i, Lz_j>");
        }
        for (size_t j = 0; j < rows; j++) {
            check(!symplectic_form(result.logical_x.row(i), st.row(j)), "<Lx, S>");
            check(!symplectic_form(result.logical_z.row(i), st.row(j)), "<Lz, S>");
            check(!symplectic_form(result.logical_x.row(i), ds.row(j)), "<Lx, D>");
            check(!symplectic_form(result.logical_z.row(i), ds.row(j)), "<Lz, D>");
        }
    }
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < rows; j++) {
            check(symplectic_form(ds.row(i), st.row(j)) == (i == j), "<D_i, S_j>");
            check(!symplectic_form(ds.row(i), ds.row(j)), "<D_i, D_j>");
        }
    }
    return result;
}

bool preserves_code(const SymplecticMatrix &m, const StabilizerCode &code) {
    if (m.num_qubits() != code.num_qubits()) {
        throw std::invalid_argument(
            "gadget acts on " + std::to_string(m.num_qubits()) + " qubits but the code has " +
            std::to_string(code.num_qubits()));
    }
    const RowSpace &space = code.row_space();
    for (const auto &row : code.generators().rows()) {
        if (!space.contains(m.apply(row))) {
            return false;
        }
    }
    return true;
}

SymplecticMatrix logical_action(const SymplecticMatrix &m, const StabilizerCode &code) {
    if (!preserves_code(m, code)) {
        throw std::invalid_argument("gadget does not preserve the code");
    }
    const StandardFormCode &sf = code.standard_form();
    size_t k = sf.num_logical;
    BitMatrix action(2 * k, 2 * k);
    for (size_t col = 0; col < 2 * k; col++) {
        const BitVec &rep = col < k ? sf.logical_x.row(col) : sf.logical_z.row(col - k);
        BitVec image = m.apply(rep);
        BitVec residual = image;
        for (size_t i = 0; i < k; i++) {
            // Coefficient on L_x[i] pairs with L_z[i], and vice versa.
            if (symplectic_form(image, sf.logical_z.row(i))) {
                action.set(i, col, true);
                residual ^= sf.logical_x.row(i);
            }
            if (symplectic_form(image, sf.logical_x.row(i))) {
                action.set(k + i, col, true);
                residual ^= sf.logical_z.row(i);
            }
        }
        if (!code.row_space().contains(residual)) {
            throw std::logic_error("logical decomposition left a non-stabilizer residual");
        }
    }
    if (!is_symplectic(action)) {
        throw std::logic_error("logical action is not symplectic");
    }
    return SymplecticMatrix(std::move(action));
}

}  // namespace nogo
