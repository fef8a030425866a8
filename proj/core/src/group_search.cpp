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

#include "nogo/group_search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <deque>
#include <mutex>
#include <thread>

namespace nogo {

BitVec canonical_key(const SymplecticMatrix &m) {
    size_t d = m.dim();
    BitVec key(d * d);
    for (size_t r = 0; r < d; r++) {
        const BitVec &row = m.matrix().row(r);
        for (size_t c = row.find_next(0); c < d; c = row.find_next(c + 1)) {
            key.set(r * d + c, true);
        }
    }
    return key;
}

GroupClosure::GroupClosure(size_t k, std::vector<SymplecticMatrix> generators)
    : k_(k), generators_(std::move(generators)) {}

std::vector<SymplecticMatrix> GroupClosure::elements() const {
    std::vector<SymplecticMatrix> out;
    out.reserve(elements_.size());
    for (const auto &[key, m] : elements_) {
        out.push_back(m);
    }
    return out;
}

std::map<uint64_t, size_t> GroupClosure::order_histogram() const {
    std::map<uint64_t, size_t> hist;
    for (const auto &[key, m] : elements_) {
        hist[element_order(m)]++;
    }
    return hist;
}

GroupClosure generate_group(size_t k, std::span<const SymplecticMatrix> generators, size_t cap) {
    for (const auto &g : generators) {
        if (g.num_qubits() != k) {
            throw std::invalid_argument(
                "generator acts on " + std::to_string(g.num_qubits()) + " qubits, expected " + std::to_string(k));
        }
    }
    GroupClosure gc(k, std::vector<SymplecticMatrix>(generators.begin(), generators.end()));
    SymplecticMatrix id = SymplecticMatrix::identity(k);
    gc.elements_.emplace(canonical_key(id), id);
    std::deque<SymplecticMatrix> frontier = {id};
    while (!frontier.empty()) {
        SymplecticMatrix g = std::move(frontier.front());
        frontier.pop_front();
        for (const auto &s : generators) {
            SymplecticMatrix h = g * s;
            BitVec key = canonical_key(h);
            if (gc.elements_.count(key)) {
                continue;
            }
            if (gc.elements_.size() >= cap) {
                gc.complete_ = false;
                return gc;
            }
            gc.elements_.emplace(std::move(key), h);
            frontier.push_back(std::move(h));
        }
    }
    gc.complete_ = true;
    return gc;
}

std::vector<SymplecticMatrix> enumerate_symplectic_group(size_t k) {
    if (k < 1 || k > 2) {
        throw FeasibilityError("brute-force enumeration of Sp(2k, 2) supports k = 1 or 2");
    }
    size_t d = 2 * k;
    uint64_t total = uint64_t{1} << (d * d);
    std::vector<SymplecticMatrix> result;
    for (uint64_t bits = 0; bits < total; bits++) {
        BitMatrix m(d, d);
        for (size_t r = 0; r < d; r++) {
            for (size_t c = 0; c < d; c++) {
                m.set(r, c, (bits >> (r * d + c)) & 1);
            }
        }
        if (is_symplectic(m)) {
            result.emplace_back(std::move(m));
        }
    }
    return result;
}

bool is_full_clifford(const GroupClosure &gc, size_t k) {
    if (!gc.complete()) {
        throw std::invalid_argument("cannot compare an incomplete closure with the group order");
    }
    return gc.k() == k && BigUint(gc.size()) == group_order(k);
}

std::vector<Permutation> all_permutations(size_t n) {
    std::vector<Permutation> result;
    Permutation p = identity_permutation(n);
    do {
        result.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return result;
}

namespace {

/// Row space over F2 of packed vectors (at most 64 bits).
class PackedSpace {
   public:
    explicit PackedSpace(const std::vector<uint64_t> &rows) {
        for (uint64_t v : rows) {
            v = reduce(v);
            if (!v) {
                continue;
            }
            unsigned pivot = std::countr_zero(v);
            for (auto &b : basis_) {
                if ((b >> pivot) & 1) {
                    b ^= v;
                }
            }
            basis_.push_back(v);
            pivots_.push_back(pivot);
        }
    }

    uint64_t reduce(uint64_t v) const {
        for (size_t i = 0; i < basis_.size(); i++) {
            if ((v >> pivots_[i]) & 1) {
                v ^= basis_[i];
            }
        }
        return v;
    }

    bool contains(uint64_t v) const { return reduce(v) == 0; }

   private:
    std::vector<uint64_t> basis_;
    std::vector<unsigned> pivots_;
};

struct LocalBits {
    bool xx, xz, zx, zz;  // image X part from (x, z), image Z part from (x, z)
};

std::array<LocalBits, 6> local_bits() {
    std::array<LocalBits, 6> bits{};
    for (LocalClifford g : kAllLocals) {
        const auto &m = local_matrix(g);
        bits[static_cast<size_t>(g)] = {m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1)};
    }
    return bits;
}

/// Applies per-qubit locals given as one qubit mask per local type.
uint64_t apply_locals(uint64_t v, size_t n, const std::array<uint64_t, 6> &masks, const std::array<LocalBits, 6> &lb) {
    uint64_t low = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    uint64_t x = v & low;
    uint64_t z = (v >> n) & low;
    uint64_t nx = 0;
    uint64_t nz = 0;
    for (size_t g = 0; g < 6; g++) {
        uint64_t m = masks[g];
        if (!m) {
            continue;
        }
        uint64_t gx = (lb[g].xx ? x : 0) ^ (lb[g].xz ? z : 0);
        uint64_t gz = (lb[g].zx ? x : 0) ^ (lb[g].zz ? z : 0);
        nx |= gx & m;
        nz |= gz & m;
    }
    return nx | (nz << n);
}

/// P^-1 v: the Pauli on qubit perm[i] moves to qubit i.
uint64_t apply_inverse_permutation(uint64_t v, const Permutation &perm) {
    size_t n = perm.size();
    uint64_t out = 0;
    for (size_t i = 0; i < n; i++) {
        out |= ((v >> perm[i]) & 1) << i;
        out |= ((v >> (n + perm[i])) & 1) << (n + i);
    }
    return out;
}

uint64_t checked_local_count(size_t n) {
    uint64_t count = 1;
    for (size_t i = 0; i < n; i++) {
        count *= 6;
    }
    return count;
}

std::vector<LocalClifford> decode_locals(uint64_t index, size_t n) {
    std::vector<LocalClifford> locals(n);
    for (size_t q = 0; q < n; q++) {
        locals[q] = kAllLocals[index % 6];
        index /= 6;
    }
    return locals;
}

/// Collects distinct logical actions and checks that they already form a group.
class LogicalImage {
   public:
    explicit LogicalImage(const StabilizerCode &code) : code_(code) {}

    void add(const Automorphism &a) {
        SymplecticMatrix logical = logical_action(aut_to_symplectic(a), code_);
        std::lock_guard lock(mutex_);
        preserving_++;
        images_.try_emplace(canonical_key(logical), std::move(logical));
    }

    LogicalGroupResult finish(uint64_t candidates) {
        size_t k = code_.num_logical();
        std::vector<SymplecticMatrix> gens;
        GroupClosure closure = generate_group(k, gens);
        for (const auto &[key, g] : images_) {
            if (!closure.contains(g)) {
                gens.push_back(g);
                closure = generate_group(k, gens);
            }
        }
        if (closure.size() != images_.size()) {
            throw std::logic_error(
                "logical image of the preserving gadgets is not closed: " + std::to_string(images_.size()) +
                " actions generate " + std::to_string(closure.size()) + " elements");
        }
        return {std::move(closure), candidates, preserving_};
    }

   private:
    const StabilizerCode &code_;
    std::mutex mutex_;
    uint64_t preserving_ = 0;
    std::map<BitVec, SymplecticMatrix> images_;
};

}  // namespace

uint64_t for_each_preserving_automorphism(const StabilizerCode &code, const std::vector<Permutation> &perms,
                                          const std::optional<std::vector<std::vector<LocalClifford>>> &locals,
                                          const std::function<void(const Automorphism &)> &visit,
                                          unsigned threads) {
    size_t n = code.num_qubits();
    if (2 * n > 64) {
        throw FeasibilityError("gadget enumeration supports at most 32 qubits");
    }
    for (const auto &p : perms) {
        if (p.size() != n) {
            throw std::invalid_argument("permutation size does not match the code");
        }
        validate_permutation(p);
    }
    if (locals) {
        for (const auto &l : *locals) {
            if (l.size() != n) {
                throw std::invalid_argument("local assignment size does not match the code");
            }
        }
    } else if (n > kMaxTransversalQubits) {
        throw FeasibilityError("6^n local assignments are infeasible for n > " + std::to_string(kMaxTransversalQubits));
    }
    uint64_t local_count = locals ? locals->size() : checked_local_count(n);

    std::vector<uint64_t> gens;
    for (const auto &row : code.generators().rows()) {
        uint64_t v = 0;
        for (size_t i = row.find_next(0); i < 2 * n; i = row.find_next(i + 1)) {
            v |= uint64_t{1} << i;
        }
        gens.push_back(v);
    }
    const auto lb = local_bits();

    // Work items: (permutation, block of local indices).
    constexpr uint64_t kBlock = 4096;
    uint64_t blocks_per_perm = (local_count + kBlock - 1) / kBlock;
    uint64_t total_items = perms.size() * blocks_per_perm;
    std::vector<PackedSpace> spaces;
    for (const auto &p : perms) {
        std::vector<uint64_t> moved;
        for (uint64_t g : gens) {
            moved.push_back(apply_inverse_permutation(g, p));
        }
        spaces.emplace_back(moved);
    }

    std::atomic<uint64_t> next{0};
    std::mutex visit_mutex;
    auto worker = [&] {
        std::vector<LocalClifford> assignment(n);
        while (true) {
            uint64_t item = next.fetch_add(1);
            if (item >= total_items) {
                return;
            }
            size_t pi = static_cast<size_t>(item / blocks_per_perm);
            uint64_t lo = (item % blocks_per_perm) * kBlock;
            uint64_t hi = std::min(local_count, lo + kBlock);
            const PackedSpace &space = spaces[pi];
            for (uint64_t li = lo; li < hi; li++) {
                if (locals) {
                    assignment = (*locals)[li];
                } else {
                    assignment = decode_locals(li, n);
                }
                std::array<uint64_t, 6> masks{};
                for (size_t q = 0; q < n; q++) {
                    masks[static_cast<size_t>(assignment[q])] |= uint64_t{1} << q;
                }
                bool ok = true;
                for (uint64_t g : gens) {
                    if (!space.contains(apply_locals(g, n, masks, lb))) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    std::lock_guard lock(visit_mutex);
                    visit(Automorphism{perms[pi], assignment});
                }
            }
        }
    };

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    if (threads == 1 || total_items <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
    }
    return perms.size() * local_count;
}

LogicalGroupResult transversal_logical_group(const StabilizerCode &code, unsigned threads) {
    size_t n = code.num_qubits();
    if (n > kMaxTransversalQubits) {
        throw FeasibilityError(
            "transversal enumeration needs 6^" + std::to_string(n) + " candidates; limit is n <= " +
            std::to_string(kMaxTransversalQubits) + ". Use the automorphism search with an explicit local list.");
    }
    LogicalImage image(code);
    uint64_t candidates = for_each_preserving_automorphism(
        code, {identity_permutation(n)}, std::nullopt, [&](const Automorphism &a) { image.add(a); }, threads);
    return image.finish(candidates);
}

LogicalGroupResult automorphism_logical_group(const StabilizerCode &code, const SearchOptions &options) {
    size_t n = code.num_qubits();
    std::vector<Permutation> perms;
    if (options.perms) {
        perms = *options.perms;
    } else {
        if (n > kMaxFullPermutationQubits) {
            throw FeasibilityError(
                "all " + std::to_string(n) + "! permutations is infeasible; supply an explicit permutation list (n <= " +
                std::to_string(kMaxFullPermutationQubits) + " for the full set)");
        }
        perms = all_permutations(n);
    }
    bool identity_only = perms.size() == 1 && perms[0] == identity_permutation(n);
    if (!options.locals && n > kMaxFullLocalsQubits && !(identity_only && n <= kMaxTransversalQubits)) {
        throw FeasibilityError(
            "permutations x 6^" + std::to_string(n) + " locals is infeasible; restrict locals to an explicit list (n <= " +
            std::to_string(kMaxFullLocalsQubits) + " for the full product)");
    }
    LogicalImage image(code);
    uint64_t candidates = for_each_preserving_automorphism(
        code, perms, options.locals, [&](const Automorphism &a) { image.add(a); }, options.threads);
    return image.finish(candidates);
}

bool keeps_logical_z_commuting(const SymplecticMatrix &g) {
    size_t k = g.num_qubits();
    for (size_t i = 0; i < k; i++) {
        BitVec z(2 * k);
        z.set(k + i, true);
        if (symplectic_form(g.apply(z), z)) {
            return false;
        }
    }
    return true;
}

bool is_bell_like(const SymplecticMatrix &g) { return element_order(g) == 5 && !keeps_logical_z_commuting(g); }

NoGoReport no_go_witness(const StabilizerCode &code, NoGoMode mode, const SearchOptions &options) {
    size_t k = code.num_logical();
    if (k < 2) {
        throw std::invalid_argument("the no-go statements concern k >= 2 logical qubits; this code has k = " + std::to_string(k));
    }
    NoGoReport report;
    report.mode = mode;
    report.code_name = code.name();
    report.n = code.num_qubits();
    report.k = k;
    LogicalGroupResult found =
        mode == NoGoMode::Transversal ? transversal_logical_group(code, options.threads) : automorphism_logical_group(code, options);
    report.candidates = found.candidates;
    report.preserving = found.preserving;
    report.group_size = found.group.size();
    report.full_group_order = group_order(k);
    report.is_full = is_full_clifford(found.group, k);
    report.prime = primitive_prime_divisor(k);
    for (const auto &g : found.group.elements()) {
        uint64_t order = element_order(g);
        report.order_histogram[order]++;
        if (order == report.prime) {
            report.order_prime_count++;
        }
        if (order == 5 && !keeps_logical_z_commuting(g)) {
            report.bell_like_count++;
        }
    }
    report.target = construct_prime_order(k);

    if (mode == NoGoMode::Transversal) {
        report.passed = report.order_prime_count == 0 && !report.is_full;
    } else {
        std::vector<Permutation> perms = options.perms ? *options.perms : all_permutations(report.n);
        bool holds = true;
        size_t count = 0;
        for_each_preserving_automorphism(
            code, perms, std::vector<std::vector<LocalClifford>>{std::vector<LocalClifford>(report.n, LocalClifford::I)},
            [&](const Automorphism &a) {
                count++;
                holds = holds && keeps_logical_z_commuting(logical_action(aut_to_symplectic(a), code));
            },
            options.threads);
        report.permutations_keep_z_commuting = holds;
        report.pure_permutation_gadgets = count;
        report.passed = report.bell_like_count == 0 && !report.is_full && holds;
    }
    return report;
}

}  // namespace nogo
