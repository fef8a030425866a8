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

#include "cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "input.hpp"
#include "json.hpp"
#include "nogo/constructions.hpp"
#include "nogo/field.hpp"
#include "nogo/gadget.hpp"
#include "nogo/group_search.hpp"
#include "nogo/stabilizer_code.hpp"
#include "nogo/symplectic.hpp"

namespace nogo::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr size_t kMaxConstructK = 12;
constexpr uint64_t kMaxFieldTable = 65536;

/// A finished subcommand: the JSON report, its exit code and an optional
/// custom text rendering (the generic one is used otherwise).
struct Report {
    Json json;
    int exit_code = kExitOk;
    std::string text;
};

Json matrix_rows(const BitMatrix &m) {
    Json rows = Json::array();
    for (const auto &row : m.rows()) {
        rows.push_back(row.str());
    }
    return rows;
}

Json pauli_rows(const BitMatrix &m) {
    Json rows = Json::array();
    for (const auto &row : m.rows()) {
        rows.push_back(PauliVec(row).str());
    }
    return rows;
}

Json histogram_json(const std::map<uint64_t, size_t> &hist) {
    Json h = Json::object();
    for (const auto &[order, count] : hist) {
        h[std::to_string(order)] = count;
    }
    return h;
}

std::string scalar_text(const Json &v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_null()) {
        return "none";
    }
    return v.dump();
}

bool all_scalars(const Json &v) {
    for (const auto &item : v) {
        if (item.is_structured()) {
            return false;
        }
    }
    return true;
}

/// Generic "key: value" rendering with the same facts as the JSON.
void render_text(const Json &v, std::ostream &out, size_t indent) {
    std::string pad(indent, ' ');
    for (const auto &[key, value] : v.items()) {
        if (key == "command") {
            continue;
        }
        if (value.is_object()) {
            out << pad << key << ":\n";
            render_text(value, out, indent + 2);
        } else if (value.is_array() && all_scalars(value)) {
            bool strings = !value.empty() && value.front().is_string();
            if (strings) {
                out << pad << key << ":\n";
                for (const auto &item : value) {
                    out << pad << "  " << item.get<std::string>() << "\n";
                }
            } else {
                out << pad << key << ": " << value.dump() << "\n";
            }
        } else if (value.is_array()) {
            out << pad << key << ":\n";
            for (const auto &item : value) {
                out << pad << "  -\n";
                render_text(item, out, indent + 4);
            }
        } else {
            out << pad << key << ": " << scalar_text(value) << "\n";
        }
    }
}

// ---------------------------------------------------------------------------

Report field_table(uint32_t p, unsigned m, const std::optional<std::string> &modulus_csv) {
    Polynomial modulus;
    if (modulus_csv) {
        for (uint64_t c : parse_csv(*modulus_csv, "--modulus")) {
            if (c >= p) {
                throw InputError("--modulus: coefficient " + std::to_string(c) + " is not reduced mod " + std::to_string(p));
            }
            modulus.push_back(static_cast<uint32_t>(c));
        }
        if (modulus.size() != m + 1) {
            throw InputError(
                "--modulus: expected " + std::to_string(m + 1) + " coefficients (constant term first) for degree " +
                std::to_string(m) + ", got " + std::to_string(modulus.size()));
        }
    } else {
        if (!is_prime(p)) {
            throw InputError("--p: " + std::to_string(p) + " is not prime");
        }
        modulus = find_primitive(p, m);
    }
    FieldSpecPtr field = FieldSpec::create(p, modulus);
    if (field->unit_count() > kMaxFieldTable) {
        throw InputError("field has " + std::to_string(field->unit_count()) + " units; the table is limited to " +
                         std::to_string(kMaxFieldTable));
    }
    FieldElement alpha = FieldElement::alpha(field);
    uint64_t order = multiplicative_order(alpha);

    Report r;
    r.json["p"] = p;
    r.json["m"] = m;
    r.json["modulus"] = modulus;
    r.json["modulus_str"] = polynomial_to_string(modulus);
    r.json["alpha_order"] = order;
    r.json["primitive"] = order == field->unit_count();
    Json table = Json::array();
    std::ostringstream text;
    text << "# GF(" << field->unit_count() + 1 << ") = F_" << p << "[x] / (" << polynomial_to_string(modulus) << ")\n";
    text << "# ord(alpha) = " << order << "\n";
    FieldElement power = alpha;
    for (uint64_t k = 1; k <= field->unit_count(); k++) {
        table.push_back({{"power", k}, {"coeffs", power.coeffs()}, {"value", power.str()}});
        text << "alpha^" << k << " = " << power.str() << "\n";
        power *= alpha;
    }
    r.json["table"] = std::move(table);
    r.text = text.str();
    return r;
}

Json field_element_strings(const Polynomial &poly, const std::vector<uint64_t> &bits) {
    FieldSpecPtr field = FieldSpec::create(2, poly);
    Json out = Json::array();
    for (uint64_t b : bits) {
        out.push_back(FieldElement::from_bits(field, b).str());
    }
    return out;
}

Report construct(const std::string &kind, size_t k, const std::optional<uint64_t> &theta,
                 const std::optional<std::string> &basis_csv) {
    if (k < 1 || k > kMaxConstructK) {
        throw InputError("--k: " + std::to_string(k) + " is outside the supported range 1.." + std::to_string(kMaxConstructK));
    }
    if (kind != "w" && (theta || basis_csv)) {
        throw InputError("--theta and --basis apply to 'construct w' only");
    }
    OrderConstruction c;
    uint64_t expected = 0;
    if (kind == "v") {
        c = construct_v(k);
        expected = (uint64_t{1} << k) - 1;
    } else if (kind == "w") {
        WOptions options;
        options.theta_exponent = theta;
        if (basis_csv) {
            options.basis_exponents = parse_csv(*basis_csv, "--basis");
        }
        c = construct_w(k, options);
        expected = (uint64_t{1} << k) + 1;
    } else {
        c = construct_prime_order(k);
        expected = primitive_prime_divisor(k);
    }
    uint64_t order = element_order(c.matrix);
    bool symplectic = is_symplectic(c.matrix.matrix());

    Report r;
    r.json["kind"] = std::string(to_string(c.kind));
    r.json["k"] = k;
    r.json["order"] = order;
    r.json["expected_order"] = expected;
    r.json["symplectic"] = symplectic;
    r.json["matrix"] = matrix_rows(c.matrix.matrix());
    Json prov;
    prov["polynomial"] = c.polynomial;
    prov["polynomial_str"] = polynomial_to_string(c.polynomial);
    if (c.theta_exponent) {
        prov["theta_exponent"] = *c.theta_exponent;
    }
    if (!c.basis.empty()) {
        prov["basis"] = field_element_strings(c.polynomial, c.basis);
        prov["basis_bits"] = c.basis;
    }
    if (c.multiplier) {
        prov["multiplier"] = field_element_strings(c.polynomial, {*c.multiplier}).front();
    }
    if (c.prime) {
        prov["prime"] = *c.prime;
        prov["base_kind"] = std::string(to_string(*c.base_kind));
        prov["base_power"] = *c.base_power;
    }
    r.json["provenance"] = prov;
    r.exit_code = order == expected && symplectic ? kExitOk : kExitMismatch;

    // Matrix first so the text output is itself a valid matrix file.
    std::ostringstream text;
    text << c.matrix.matrix().str();
    text << "# kind: " << to_string(c.kind) << "\n# k: " << k << "\n# order: " << order << " (expected " << expected
         << ")\n# symplectic: " << (symplectic ? "true" : "false") << "\n";
    for (const auto &[key, value] : prov.items()) {
        if (value.is_array() && all_scalars(value)) {
            text << "# " << key << ":";
            for (const auto &item : value) {
                text << " " << (item.is_string() ? "[" + item.get<std::string>() + "]" : item.dump());
            }
            text << "\n";
        } else {
            text << "# " << key << ": " << scalar_text(value) << "\n";
        }
    }
    r.text = text.str();
    return r;
}

Report order(const std::string &path) {
    BitMatrix m = read_matrix_file(path);
    Report r;
    r.json["file"] = path;
    r.json["qubits"] = m.num_rows() / 2;
    bool symplectic = is_symplectic(m);
    r.json["symplectic"] = symplectic;
    if (symplectic) {
        r.json["order"] = element_order(SymplecticMatrix(m));
    } else {
        r.json["order"] = nullptr;
        r.exit_code = kExitMismatch;
    }
    return r;
}

Report group_order_report(size_t k, bool brute_force) {
    if (k < 1 || k > 63) {
        throw InputError("--k: " + std::to_string(k) + " is outside the supported range 1..63");
    }
    Report r;
    r.json["k"] = k;
    r.json["order"] = group_order(k).str();
    Json factors = Json::array();
    for (const auto &f : group_order_factors(k)) {
        factors.push_back({{"prime", f.prime}, {"exponent", f.exponent}});
    }
    r.json["factors"] = factors;
    if (brute_force) {
        if (k > 2) {
            throw InputError("--brute-force: enumeration is limited to k <= 2");
        }
        size_t count = enumerate_symplectic_group(k).size();
        r.json["brute_force"] = std::to_string(count);
        r.json["match"] = BigUint(count) == group_order(k);
        if (!r.json["match"].get<bool>()) {
            r.exit_code = kExitMismatch;
        }
    }
    return r;
}

Json code_json(const StabilizerCode &code) {
    Json j;
    j["name"] = code.name();
    j["n"] = code.num_qubits();
    j["k"] = code.num_logical();
    if (code.declared_distance()) {
        j["d"] = *code.declared_distance();
    } else {
        j["d"] = nullptr;
    }
    return j;
}

Report standard_form(const std::string &path) {
    StabilizerCode code = read_code_file(path);
    const StandardFormCode &sf = code.standard_form();
    Report r;
    r.json["code"] = code_json(code);
    r.json["x_rank"] = sf.x_rank;
    Json perm = Json::array();
    for (size_t q : sf.qubit_permutation) {
        perm.push_back(q + 1);
    }
    r.json["permutation"] = perm;
    r.json["standard"] = pauli_rows(sf.standard);
    r.json["stabilizers"] = pauli_rows(sf.stabilizers);
    r.json["logical_x"] = pauli_rows(sf.logical_x);
    r.json["logical_z"] = pauli_rows(sf.logical_z);
    r.json["destabilizers"] = pauli_rows(sf.destabilizers);
    return r;
}

SymplecticMatrix require_symplectic(const GadgetFile &g, const std::string &path) {
    if (!is_symplectic(g.raw)) {
        throw InputError(path + ": gadget matrix is not symplectic");
    }
    return SymplecticMatrix(g.raw);
}

void require_size(size_t gadget_qubits, const StabilizerCode &code, const std::string &path) {
    if (gadget_qubits != code.num_qubits()) {
        throw InputError(path + ": gadget acts on " + std::to_string(gadget_qubits) + " qubits but the code has " +
                         std::to_string(code.num_qubits()));
    }
}

/// Fills preservation and logical-action facts; returns false when M does not preserve the code.
bool logical_json(const SymplecticMatrix &m, const StabilizerCode &code, Json &j) {
    bool preserves = preserves_code(m, code);
    j["preserves"] = preserves;
    if (!preserves) {
        j["logical"] = nullptr;
        return false;
    }
    SymplecticMatrix logical = logical_action(m, code);
    uint64_t physical_order = element_order(m);
    uint64_t logical_order = logical.dim() ? element_order(logical) : 1;
    j["logical"] = matrix_rows(logical.matrix());
    j["logical_order"] = logical_order;
    j["physical_order"] = physical_order;
    j["order_divides"] = physical_order % logical_order == 0;
    return true;
}

Report logical_action_report(const std::string &gadget_path, const std::string &code_path) {
    GadgetFile g = read_gadget_file(gadget_path);
    StabilizerCode code = read_code_file(code_path);
    SymplecticMatrix m = require_symplectic(g, gadget_path);
    require_size(m.num_qubits(), code, gadget_path);
    Report r;
    r.json["code"] = code_json(code);
    bool ok = logical_json(m, code, r.json);
    r.exit_code = ok && r.json["order_divides"].get<bool>() ? kExitOk : kExitMismatch;
    return r;
}

Json locals_json(const std::vector<LocalClifford> &locals) {
    Json j = Json::array();
    for (LocalClifford g : locals) {
        j.push_back(std::string(to_string(g)));
    }
    return j;
}

Json automorphism_json(const Automorphism &a) {
    Json j;
    j["perm"] = cycles_to_string(a.perm);
    j["locals"] = locals_json(a.locals);
    j["order"] = aut_order(a);

    // The common length of the nontrivial cycles, if any.
    std::optional<uint64_t> length;
    bool uniform = true;
    for (const auto &c : cycles(a.perm)) {
        if (c.size() < 2) {
            continue;
        }
        if (length && *length != c.size()) {
            uniform = false;
        }
        length = c.size();
    }
    if (!uniform || !length || *length <= 3 || !is_prime(*length)) {
        j["p_local"] = nullptr;
        return j;
    }
    Json pl;
    pl["p"] = *length;
    bool local = is_p_local(a, *length);
    pl["is_p_local"] = local;
    if (local && aut_order(a) == *length) {
        PermutationConjugation conj = conjugate_to_permutation(a);
        pl["conjugator_locals"] = locals_json(conj.transversal.locals);
        pl["conjugated_perm"] = cycles_to_string(conj.perm);
        SymplecticMatrix v = aut_to_symplectic(conj.transversal);
        pl["conjugates_to_permutation"] =
            v.inverse() * aut_to_symplectic(a) * v == permutation_matrix(conj.perm);
    }
    j["p_local"] = pl;
    return j;
}

Report classify(const std::string &gadget_path, const std::optional<std::string> &partition,
                const std::optional<std::string> &tau, const std::optional<std::string> &code_path) {
    GadgetFile g = read_gadget_file(gadget_path);
    size_t n = g.raw.num_rows() / 2;
    Report r;
    r.json["qubits"] = n;
    bool symplectic = is_symplectic(g.raw);
    r.json["symplectic"] = symplectic;
    if (!symplectic) {
        r.exit_code = kExitMismatch;
        return r;
    }
    SymplecticMatrix m(g.raw);
    std::optional<Partition> part;
    std::optional<ZXDuality> duality;
    std::optional<StabilizerCode> code;
    if (partition) {
        part = parse_partition(*partition, n);
    }
    if (tau) {
        duality = parse_tau(*tau, n);
    }
    if (code_path) {
        code = read_code_file(*code_path);
        require_size(n, *code, gadget_path);
    }

    r.json["order"] = element_order(m);
    FoldResult fold = min_fold(m);
    r.json["min_fold"] = {{"fold", fold.fold}, {"partition", fold.partition.str()}};
    if (part) {
        r.json["partition"] = {{"blocks", part->str()}, {"fold", part->fold()}, {"is_kfold", is_kfold(m, *part)}};
    }
    if (duality) {
        r.json["fold_transversal"] = {{"tau", tau_to_string(*duality)},
                                      {"orbits", duality->orbits().str()},
                                      {"value", is_fold_transversal(m, *duality)}};
    }
    if (g.automorphism) {
        r.json["automorphism"] = automorphism_json(*g.automorphism);
    } else {
        r.json["automorphism"] = nullptr;
    }
    if (code) {
        Json cj = code_json(*code);
        logical_json(m, *code, cj);
        r.json["code"] = cj;
    }
    return r;
}

Report verify_nogo(const std::string &path, const std::string &mode, unsigned threads) {
    StabilizerCode code = read_code_file(path);
    SearchOptions options;
    options.threads = threads;
    NoGoReport rep = no_go_witness(code, mode == "automorphism" ? NoGoMode::Automorphism : NoGoMode::Transversal, options);
    Report r;
    r.json["code"] = code_json(code);
    r.json["mode"] = mode;
    r.json["candidates"] = rep.candidates;
    r.json["preserving"] = rep.preserving;
    r.json["logical_group_size"] = rep.group_size;
    r.json["full_group_order"] = rep.full_group_order.str();
    r.json["is_full_group"] = rep.is_full;
    r.json["prime"] = rep.prime;
    r.json["order_histogram"] = histogram_json(rep.order_histogram);
    r.json["order_prime_count"] = rep.order_prime_count;
    r.json["bell_like_count"] = rep.bell_like_count;
    Json predictions;
    if (rep.mode == NoGoMode::Transversal) {
        predictions["no_order_p_element"] = rep.order_prime_count == 0;
        predictions["proper_subgroup"] = !rep.is_full;
    } else {
        predictions["no_bell_like_element"] = rep.bell_like_count == 0;
        predictions["proper_subgroup"] = !rep.is_full;
        predictions["permutations_keep_z_commuting"] = *rep.permutations_keep_z_commuting;
        r.json["pure_permutation_gadgets"] = rep.pure_permutation_gadgets;
    }
    r.json["predictions"] = predictions;
    r.json["excluded_target"] = {{"kind", std::string(to_string(rep.target.kind))},
                                 {"order", rep.target.order},
                                 {"matrix", matrix_rows(rep.target.matrix.matrix())}};
    r.json["passed"] = rep.passed;
    r.exit_code = rep.passed ? kExitOk : kExitMismatch;
    return r;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Symplectic tools for Clifford gadgets on stabilizer codes", "nogo"};
    app.require_subcommand(1);
    bool json = false;
    std::function<Report()> action;

    auto *ft = app.add_subcommand("field-table", "Power table of alpha in GF(p^m)");
    uint32_t p = 0;
    unsigned m = 0;
    std::optional<std::string> modulus;
    ft->add_option("--p", p, "Characteristic")->required();
    ft->add_option("--m", m, "Extension degree")->required()->check(CLI::Range(1u, 64u));
    ft->add_option("--modulus", modulus, "Modulus coefficients, constant term first (e.g. 2,1,1)");
    ft->callback([&] { action = [&] { return field_table(p, m, modulus); }; });

    auto *cs = app.add_subcommand("construct", "Symplectic matrix of order 2^k-1 (v), 2^k+1 (w) or p (prime)");
    std::string kind;
    size_t k = 0;
    std::optional<uint64_t> theta;
    std::optional<std::string> basis;
    cs->add_option("kind", kind, "v, w or prime")->required()->check(CLI::IsMember({"v", "w", "prime"}));
    cs->add_option("--k", k, "Number of qubits")->required();
    cs->add_option("--theta", theta, "w only: use theta = alpha^J");
    cs->add_option("--basis", basis, "w only: symplectic basis as exponents of alpha (e.g. 0,5,3,4)");
    cs->callback([&] { action = [&] { return construct(kind, k, theta, basis); }; });

    auto *od = app.add_subcommand("order", "Order of a symplectic matrix");
    std::string matrix_path;
    od->add_option("file", matrix_path, "Matrix text file")->required();
    od->callback([&] { action = [&] { return order(matrix_path); }; });

    auto *go = app.add_subcommand("group-order", "|Sp(2k, 2)|");
    bool brute = false;
    go->add_option("--k", k, "Number of qubits")->required();
    go->add_flag("--brute-force", brute, "Also count by enumeration (k <= 2)");
    go->callback([&] { action = [&] { return group_order_report(k, brute); }; });

    auto *sf = app.add_subcommand("standard-form", "Standard form, logical operators and destabilizers");
    std::string code_path;
    sf->add_option("code", code_path, "Code file")->required();
    sf->callback([&] { action = [&] { return standard_form(code_path); }; });

    auto *la = app.add_subcommand("logical-action", "Logical action of a gadget on a code");
    std::string gadget_path;
    la->add_option("gadget", gadget_path, "Gadget JSON file")->required();
    la->add_option("code", code_path, "Code file")->required();
    la->callback([&] { action = [&] { return logical_action_report(gadget_path, code_path); }; });

    auto *cl = app.add_subcommand("classify", "Locality, order and code facts of a gadget");
    std::optional<std::string> partition;
    std::optional<std::string> tau;
    std::optional<std::string> classify_code;
    cl->add_option("gadget", gadget_path, "Gadget JSON file")->required();
    cl->add_option("--partition", partition, "Qubit blocks, e.g. 1,2/3,4");
    cl->add_option("--tau", tau, "ZX duality as swapped pairs, e.g. 1-2,3-4");
    cl->add_option("--code", classify_code, "Code file");
    cl->callback([&] { action = [&] { return classify(gadget_path, partition, tau, classify_code); }; });

    auto *vn = app.add_subcommand("verify-nogo", "Exhaustive check of the no-go predictions on a code");
    std::string mode = "transversal";
    unsigned threads = 1;
    vn->add_option("code", code_path, "Code file")->required();
    vn->add_option("--mode", mode, "transversal or automorphism")->check(CLI::IsMember({"transversal", "automorphism"}));
    vn->add_option("--threads", threads, "Worker threads (0 = all cores)");
    vn->callback([&] { action = [&] { return verify_nogo(code_path, mode, threads); }; });

    for (auto *sub : {ft, cs, od, go, sf, la, cl, vn}) {
        sub->add_flag("--json", json, "Emit the report as JSON");
    }

    std::vector<std::string> argv_storage = {"nogo"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    Report report;
    try {
        report = action();
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error &e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitMismatch;
    }

    Json full;
    full["command"] = Json(std::vector<std::string>(args.begin(), args.end()));
    for (auto &[key, value] : report.json.items()) {
        full[key] = value;
    }
    if (json) {
        out << full.dump(2) << "\n";
    } else if (!report.text.empty()) {
        out << report.text;
    } else {
        render_text(full, out, 0);
    }
    return report.exit_code;
}

}  // namespace nogo::cli
