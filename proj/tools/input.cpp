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

#include "input.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nogo::cli {

namespace {

struct Line {
    size_t number;  // 1-based
    std::string text;
};

std::string_view trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError(path + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Non-blank, non-comment lines, trimmed.
std::vector<Line> content_lines(const std::string &path) {
    std::istringstream in(read_text(path));
    std::vector<Line> lines;
    std::string raw;
    for (size_t number = 1; std::getline(in, raw); number++) {
        std::string_view t = trim(raw);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        lines.push_back({number, std::string(t)});
    }
    return lines;
}

std::string where(const std::string &path, size_t line, size_t col = 0) {
    std::string s = path + ":" + std::to_string(line);
    if (col) {
        s += ":" + std::to_string(col);
    }
    return s + ": ";
}

uint64_t parse_uint(std::string_view text, const std::string &context) {
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw InputError(context + "'" + std::string(text) + "' is not a non-negative integer");
    }
    return value;
}

/// Parses one row of '0'/'1', annotating errors with the file position.
BitVec parse_bit_row(std::string_view text, const std::string &context_prefix) {
    for (size_t i = 0; i < text.size(); i++) {
        if (text[i] != '0' && text[i] != '1') {
            throw InputError(
                context_prefix + "column " + std::to_string(i + 1) + ": expected '0' or '1', got '" +
                std::string(1, text[i]) + "'");
        }
    }
    return BitVec::from_string(text);
}

void check_square_even(const BitMatrix &m, const std::string &context) {
    if (m.num_rows() == 0) {
        throw InputError(context + "matrix is empty");
    }
    if (!m.is_square()) {
        throw InputError(
            context + "matrix has " + std::to_string(m.num_rows()) + " rows of length " + std::to_string(m.num_cols()) +
            "; expected a square matrix");
    }
    if (m.num_rows() % 2) {
        throw InputError(context + "matrix dimension " + std::to_string(m.num_rows()) + " is odd; expected 2n");
    }
}

}  // namespace

BitMatrix read_matrix_file(const std::string &path) {
    std::vector<BitVec> rows;
    for (const auto &line : content_lines(path)) {
        BitVec row = parse_bit_row(line.text, where(path, line.number));
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw InputError(
                where(path, line.number) + "row has " + std::to_string(row.size()) + " entries, expected " +
                std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw InputError(path + ": no matrix rows");
    }
    BitMatrix m = BitMatrix::from_rows(std::move(rows));
    check_square_even(m, path + ": ");
    return m;
}

StabilizerCode read_code_file(const std::string &path) {
    std::string name;
    std::optional<int> distance;
    std::optional<size_t> num_qubits;
    std::vector<std::string> paulis;
    std::vector<size_t> line_of_row;
    for (const auto &line : content_lines(path)) {
        size_t eq = line.text.find('=');
        if (eq != std::string::npos) {
            std::string key(trim(std::string_view(line.text).substr(0, eq)));
            std::string value(trim(std::string_view(line.text).substr(eq + 1)));
            if (key == "name") {
                name = value;
            } else if (key == "d") {
                distance = static_cast<int>(parse_uint(value, where(path, line.number) + "d: "));
            } else if (key == "n") {
                num_qubits = parse_uint(value, where(path, line.number) + "n: ");
            } else {
                throw InputError(where(path, line.number) + "unknown header '" + key + "' (expected name, d or n)");
            }
            continue;
        }
        PauliVec p;
        try {
            p = PauliVec::parse(line.text);
        } catch (const std::invalid_argument &e) {
            throw InputError(where(path, line.number) + e.what());
        }
        if (!paulis.empty() && line.text.size() != paulis.front().size()) {
            throw InputError(
                where(path, line.number) + "generator has " + std::to_string(line.text.size()) + " qubits, expected " +
                std::to_string(paulis.front().size()));
        }
        paulis.push_back(line.text);
        line_of_row.push_back(line.number);
    }
    if (paulis.empty() && !num_qubits) {
        throw InputError(path + ": no generators; add an 'n=' header for a code without stabilizers");
    }
    if (!paulis.empty() && num_qubits && *num_qubits != paulis.front().size()) {
        throw InputError(
            where(path, line_of_row.front()) + "generators have " + std::to_string(paulis.front().size()) +
            " qubits but the header says n=" + std::to_string(*num_qubits));
    }
    try {
        StabilizerCode code = StabilizerCode::from_paulis(paulis, name, num_qubits);
        if (distance) {
            code = StabilizerCode::validate(code.generators(), name, distance);
        }
        return code;
    } catch (const CodeValidationError &e) {
        size_t row = e.kind() == CodeValidationError::Kind::Anticommuting ? e.row_b() : e.row_a();
        if (row < line_of_row.size() && e.kind() != CodeValidationError::Kind::TooManyRows) {
            throw InputError(where(path, line_of_row[row]) + e.what());
        }
        throw InputError(path + ": " + e.what());
    }
}

GadgetFile read_gadget_file(const std::string &path) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(read_text(path));
    } catch (const json::parse_error &e) {
        throw InputError(path + ": byte " + std::to_string(e.byte) + ": invalid JSON");
    }
    if (!doc.is_object()) {
        throw InputError(path + ": expected a JSON object with 'matrix' or 'automorphism'");
    }
    GadgetFile g;
    if (doc.contains("matrix") == doc.contains("automorphism")) {
        throw InputError(path + ": expected exactly one of 'matrix' or 'automorphism'");
    }
    if (doc.contains("matrix")) {
        const json &rows = doc["matrix"];
        if (!rows.is_array()) {
            throw InputError(path + ": 'matrix' must be an array of strings");
        }
        std::vector<BitVec> bits;
        for (size_t r = 0; r < rows.size(); r++) {
            std::string prefix = path + ": matrix row " + std::to_string(r + 1) + ", ";
            if (!rows[r].is_string()) {
                throw InputError(prefix + "expected a string of '0'/'1'");
            }
            BitVec row = parse_bit_row(rows[r].get<std::string>(), prefix);
            if (!bits.empty() && row.size() != bits.front().size()) {
                throw InputError(
                    prefix + "length " + std::to_string(row.size()) + ", expected " + std::to_string(bits.front().size()));
            }
            bits.push_back(std::move(row));
        }
        if (bits.empty()) {
            throw InputError(path + ": 'matrix' is empty");
        }
        g.raw = BitMatrix::from_rows(std::move(bits));
        check_square_even(g.raw, path + ": ");
        return g;
    }

    const json &aut = doc["automorphism"];
    if (!aut.is_object()) {
        throw InputError(path + ": 'automorphism' must be an object");
    }
    std::vector<LocalClifford> locals;
    if (aut.contains("locals")) {
        if (!aut["locals"].is_array()) {
            throw InputError(path + ": 'locals' must be an array of names");
        }
        for (size_t i = 0; i < aut["locals"].size(); i++) {
            const json &name = aut["locals"][i];
            try {
                if (!name.is_string()) {
                    throw std::invalid_argument("expected a string");
                }
                locals.push_back(parse_local(name.get<std::string>()));
            } catch (const std::invalid_argument &e) {
                throw InputError(path + ": locals[" + std::to_string(i) + "]: " + e.what());
            }
        }
    }
    size_t n = locals.size();
    if (aut.contains("n")) {
        if (!aut["n"].is_number_unsigned()) {
            throw InputError(path + ": 'n' must be a non-negative integer");
        }
        n = aut["n"].get<size_t>();
        if (aut.contains("locals") && locals.size() != n) {
            throw InputError(path + ": 'locals' has " + std::to_string(locals.size()) + " entries but n=" + std::to_string(n));
        }
    }
    if (n == 0) {
        throw InputError(path + ": automorphism needs 'locals' or a positive 'n'");
    }
    if (locals.empty()) {
        locals.assign(n, LocalClifford::I);
    }
    Permutation perm = identity_permutation(n);
    if (aut.contains("perm")) {
        if (!aut["perm"].is_string()) {
            throw InputError(path + ": 'perm' must be a cycle-notation string");
        }
        try {
            perm = parse_cycles(aut["perm"].get<std::string>(), n);
        } catch (const std::invalid_argument &e) {
            throw InputError(path + ": perm: " + e.what());
        }
    }
    Automorphism a{std::move(perm), std::move(locals)};
    g.raw = aut_to_symplectic(a).matrix();
    g.automorphism = std::move(a);
    return g;
}

std::vector<uint64_t> parse_csv(std::string_view text, std::string_view what) {
    std::vector<uint64_t> values;
    size_t start = 0;
    for (size_t index = 1;; index++) {
        size_t comma = text.find(',', start);
        std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        values.push_back(parse_uint(item, std::string(what) + ": entry " + std::to_string(index) + ": "));
        if (comma == std::string_view::npos) {
            return values;
        }
        start = comma + 1;
    }
}

Partition parse_partition(std::string_view text, size_t n) {
    std::vector<std::vector<size_t>> blocks;
    size_t start = 0;
    while (true) {
        size_t slash = text.find('/', start);
        std::string_view block = text.substr(start, slash == std::string_view::npos ? text.npos : slash - start);
        std::vector<size_t> qubits;
        std::string label = "--partition: block " + std::to_string(blocks.size() + 1);
        for (uint64_t q : parse_csv(block, label)) {
            if (q < 1 || q > n) {
                throw InputError(label + ": qubit " + std::to_string(q) + " is outside 1.." + std::to_string(n));
            }
            qubits.push_back(q - 1);
        }
        blocks.push_back(std::move(qubits));
        if (slash == std::string_view::npos) {
            break;
        }
        start = slash + 1;
    }
    try {
        return Partition::create(n, std::move(blocks));
    } catch (const std::invalid_argument &e) {
        throw InputError(std::string("--partition: ") + e.what());
    }
}

ZXDuality parse_tau(std::string_view text, size_t n) {
    Permutation tau = identity_permutation(n);
    std::vector<bool> used(n, false);
    size_t start = 0;
    for (size_t index = 1;; index++) {
        size_t comma = text.find(',', start);
        std::string_view pair = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        std::string label = "--tau: pair " + std::to_string(index) + ": ";
        size_t dash = pair.find('-');
        if (dash == std::string_view::npos) {
            throw InputError(label + "expected 'a-b', got '" + std::string(pair) + "'");
        }
        uint64_t a = parse_uint(trim(pair.substr(0, dash)), label);
        uint64_t b = parse_uint(trim(pair.substr(dash + 1)), label);
        for (uint64_t q : {a, b}) {
            if (q < 1 || q > n) {
                throw InputError(label + "qubit " + std::to_string(q) + " is outside 1.." + std::to_string(n));
            }
        }
        if (used[a - 1] || used[b - 1] || a == b) {
            throw InputError(label + "qubits must be distinct and appear in one pair only");
        }
        used[a - 1] = used[b - 1] = true;
        tau[a - 1] = b - 1;
        tau[b - 1] = a - 1;
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return ZXDuality(std::move(tau));
}

std::string tau_to_string(const ZXDuality &tau) {
    std::string s;
    for (size_t i = 0; i < tau.tau().size(); i++) {
        if (tau.tau()[i] > i) {
            if (!s.empty()) {
                s += ",";
            }
            s += std::to_string(i + 1) + "-" + std::to_string(tau.tau()[i] + 1);
        }
    }
    return s;
}

}  // namespace nogo::cli
