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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace nogo::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string source(const std::string &rel) { return std::string(NOGO_SOURCE_DIR) + "/" + rel; }

/// Writes `text` to a fresh temporary file and returns its path.
std::string temp_file(const std::string &name, const std::string &text) {
    auto path = std::filesystem::temp_directory_path() / ("nogo_cli_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, kExitUsage);
    EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"construct", "x", "--k", "2"}).code, kExitUsage);
    auto big = run_cli({"construct", "v", "--k", "13"});
    EXPECT_EQ(big.code, kExitUsage);
    EXPECT_NE(big.err.find("1..12"), std::string::npos);
    EXPECT_EQ(run_cli({"group-order", "--k", "3", "--brute-force"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"field-table", "--p", "4", "--m", "2"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"field-table", "--p", "2", "--m", "2", "--modulus", "1,0,1"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"order", source("codes/missing.txt")}).code, kExitUsage);
    EXPECT_EQ(run_cli({"verify-nogo", source("codes/steane.txt")}).code, kExitUsage);
    EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Cli, PositionAnnotatedErrors) {
    auto bad_matrix = temp_file("bad_matrix.txt", "# comment\n1101\n01x1\n1010\n1110\n");
    auto r = run_cli({"order", bad_matrix});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find(bad_matrix + ":3: column 3"), std::string::npos) << r.err;

    auto ragged = temp_file("ragged.txt", "1101\n010\n");
    r = run_cli({"order", ragged});
    EXPECT_NE(r.err.find(ragged + ":2:"), std::string::npos) << r.err;

    auto bad_code = temp_file("bad_code.txt", "name=x\nXXXX\n\nZZQZ\n");
    r = run_cli({"standard-form", bad_code});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find(bad_code + ":4: invalid Pauli character 'Q' at column 3"), std::string::npos) << r.err;

    auto anti = temp_file("anti.txt", "XXXX\n# gap\nZIII\n");
    r = run_cli({"standard-form", anti});
    EXPECT_NE(r.err.find(anti + ":3:"), std::string::npos) << r.err;

    auto bad_json = temp_file("bad.json", "{\"matrix\": [\"10\", ");
    r = run_cli({"classify", bad_json});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("byte"), std::string::npos) << r.err;

    auto bad_cycle = temp_file("bad_cycle.json", R"({"automorphism": {"perm": "(1 2", "locals": ["I", "I"]}})");
    r = run_cli({"classify", bad_cycle});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("perm: cycle notation, column"), std::string::npos) << r.err;

    r = run_cli({"classify", source("gadgets/bell.json"), "--partition", "1/3"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("block 2"), std::string::npos) << r.err;
}

TEST(Cli, MismatchExitCodes) {
    auto not_symplectic = temp_file("ns.txt", "10\n10\n");
    auto r = run_cli({"order", not_symplectic, "--json"});
    EXPECT_EQ(r.code, kExitMismatch);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j["symplectic"].get<bool>());

    r = run_cli({"logical-action", source("gadgets/cnot.json"), temp_file("xx.txt", "XI\n")});
    EXPECT_EQ(r.code, kExitMismatch);
}

TEST(Cli, TextAndJsonCarrySameFacts) {
    auto text = run_cli({"order", source("gadgets/bell.txt")});
    auto json = run_cli({"order", source("gadgets/bell.txt"), "--json"});
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("order: 5"), std::string::npos);
    auto j = nlohmann::json::parse(json.out);
    EXPECT_EQ(j["order"].get<int>(), 5);

    auto construct_text = run_cli({"construct", "w", "--k", "3"});
    auto construct_json = nlohmann::json::parse(run_cli({"construct", "w", "--k", "3", "--json"}).out);
    std::string rows;
    for (const auto &row : construct_json["matrix"]) {
        rows += row.get<std::string>() + "\n";
    }
    EXPECT_EQ(construct_text.out.substr(0, rows.size()), rows);
}

TEST(Cli, ConstructOutputIsAMatrixFile) {
    auto constructed = run_cli({"construct", "prime", "--k", "4"});
    ASSERT_EQ(constructed.code, 0);
    auto path = temp_file("prime4.txt", constructed.out);
    auto r = run_cli({"order", path, "--json"});
    EXPECT_EQ(nlohmann::json::parse(r.out)["order"].get<int>(), 17);
}

}  // namespace
}  // namespace nogo::cli
