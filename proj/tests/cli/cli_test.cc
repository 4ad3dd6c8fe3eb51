// Copyright 2026 The qbcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.h"
#include "gtest/gtest.h"
#include "io.h"
#include "qbcap/random.h"

using namespace qbcap;
using namespace qbcap::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("qbcap_cli_test_" + name);
}

std::string write_file(const std::string &name, const std::string &content) {
    const auto path = scratch(name);
    std::ofstream(path) << content;
    return path.string();
}

std::vector<std::vector<std::string>> parse_csv(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto &row = rows.emplace_back();
        std::string cell;
        std::istringstream cells(line);
        while (std::getline(cells, cell, ',')) {
            row.push_back(cell);
        }
        if (!line.empty() && line.back() == ',') {
            row.emplace_back();
        }
    }
    return rows;
}

double num(const std::string &s) {
    double v = 0;
    std::from_chars(s.data(), s.data() + s.size(), v);
    return v;
}

double root(double e, double gamma) {
    return std::sqrt(e * e + gamma * gamma);
}

}  // namespace

TEST(cli, bell_diagonal_capacity_report) {
    const auto r = run({"capacity", "--builtin", "bell-diagonal", "--eps", "0.5,0.3", "--gamma", "0", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_NEAR(j["total"].get<double>(), 0.8 * 0.8 + 0.2 * 0.2, 1e-12);
    EXPECT_NEAR(j["dephased_total"].get<double>(), 0.1 * (0.8 + 0.2), 1e-12);
    EXPECT_NEAR(j["marginals"][0].get<double>(), 0.0, 1e-15);
    EXPECT_NEAR(j["rbc"].get<double>(), j["total"].get<double>(), 1e-15);
    EXPECT_TRUE(j["monogamy"]["holds"].get<bool>());
}

TEST(cli, state_file_matches_builtin) {
    const std::string path = write_file("bell.json", R"({"n": 2, "diag": [0.275, 0.225, 0.225, 0.275],
                                                        "anti": [[0.05, 0], [0.2, 0]]})");
    const auto from_file = run({"capacity", "--state", path, "--eps", "0.5,0.3", "--gamma", "0.4", "--format", "csv"});
    const auto builtin = run({"capacity", "--builtin", "bell-diagonal", "--gamma", "0.4", "--format", "csv"});
    ASSERT_EQ(from_file.code, 0) << from_file.err;
    EXPECT_EQ(from_file.out, builtin.out);
}

TEST(cli, dense_state_file) {
    const std::string path = write_file("dense.json", R"({"n": 1, "dense": [[0.75, [0.1, 0.2]], [[0.1, -0.2], 0.25]]})");
    const auto r = run({"capacity", "--state", path, "--eps", "0.5", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    // Eigenvalue gap sqrt(0.5^2 + 4 |0.1 + 0.2i|^2) times the level gap 1.
    EXPECT_NEAR(j["total"].get<double>(), std::sqrt(0.25 + 4 * 0.05), 1e-12);
    EXPECT_NEAR(j["dephased_total"].get<double>(), 0.5, 1e-12);
    EXPECT_FALSE(j.contains("monogamy"));
}

TEST(cli, hamiltonian_file) {
    const std::string path = write_file("h.json", R"({"eps": [0.7, 0.2], "gamma": 0.3})");
    const auto r = run({"capacity", "--builtin", "bell-diagonal", "--hamiltonian", path, "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_NEAR(j["total"].get<double>(), 0.8 * root(0.9, 0.3) + 0.2 * root(0.5, 0.3), 1e-12);
}

TEST(cli, ghz_without_noise_weight_is_all_zeros) {
    const auto r = run({"capacity", "--builtin", "ghz-noise", "--n", "4", "--beta", "0", "--gamma", "0.5",
                        "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 2u);
    for (const auto &cell : rows[1]) {
        EXPECT_EQ(cell, "0");
    }
}

TEST(cli, malformed_input_exits_with_parse_error_naming_the_field) {
    auto r = run({"capacity", "--state", write_file("broken.json", R"({"n": 2, "diag": [0.5, "x", 0, 0.5]})")});
    EXPECT_EQ(r.code, kExitParse);
    EXPECT_NE(r.err.find("diag[1]"), std::string::npos) << r.err;

    r = run({"capacity", "--state", write_file("noanti.json", R"({"n": 1, "anti": [[0, 0]]})")});
    EXPECT_EQ(r.code, kExitParse);
    EXPECT_NE(r.err.find("diag"), std::string::npos);

    r = run({"capacity", "--state", write_file("syntax.json", R"({"n": 1, "diag": [1, 0)")});
    EXPECT_EQ(r.code, kExitParse);

    r = run({"capacity", "--state", write_file("badanti.json", R"({"n": 1, "diag": [1, 0], "anti": [[0, 0, 1]]})")});
    EXPECT_EQ(r.code, kExitParse);
    EXPECT_NE(r.err.find("anti[0]"), std::string::npos);

    r = run({"capacity", "--state", scratch("does_not_exist.json").string()});
    EXPECT_EQ(r.code, kExitParse);

    EXPECT_EQ(run({"capacity"}).code, kExitParse);
    EXPECT_EQ(run({"capacity", "--builtin", "nope"}).code, kExitParse);
    EXPECT_EQ(run({"capacity", "--builtin", "bell-diagonal", "--eps", "0.5,abc"}).code, kExitParse);
    EXPECT_EQ(run({"nonsense"}).code, kExitParse);
}

TEST(cli, invalid_states_exit_three) {
    auto r = run({"capacity", "--state",
                  write_file("block.json", R"({"n": 2, "diag": [0.5, 0, 0, 0.5], "anti": [[0.6, 0], [0, 0]]})")});
    EXPECT_EQ(r.code, kExitInvalidState);
    EXPECT_NE(r.err.find("BlockNotPSD"), std::string::npos);
    r = run({"capacity", "--state", write_file("trace.json", R"({"n": 1, "diag": [0.7, 0.7], "anti": [0]})")});
    EXPECT_EQ(r.code, kExitInvalidState);
    r = run({"capacity", "--state", write_file("herm.json", R"({"n": 1, "dense": [[0.5, 0.2], [0.1, 0.5]]})")});
    EXPECT_EQ(r.code, kExitInvalidState);
    EXPECT_EQ(run({"capacity", "--builtin", "bell-diagonal", "--a", "1,1,1"}).code, kExitInvalidState);
    EXPECT_EQ(run({"capacity", "--builtin", "ghz-noise", "--beta", "1.5"}).code, kExitInvalidState);
}

TEST(cli, bad_configuration_exits_four) {
    EXPECT_EQ(run({"capacity", "--builtin", "bell-diagonal", "--eps", "0.5"}).code, kExitBadConfig);
    EXPECT_EQ(run({"capacity", "--builtin", "bell-diagonal", "--eps", "0.3,0.5"}).code, kExitBadConfig);
    EXPECT_EQ(run({"capacity", "--builtin", "bell-diagonal", "--gamma", "-1"}).code, kExitBadConfig);
    EXPECT_EQ(run({"sweep-ghz", "--beta-grid", "0:1:0"}).code, kExitBadConfig);
    EXPECT_EQ(run({"sweep-ghz", "--n", "1"}).code, kExitBadConfig);
    EXPECT_EQ(run({"ratio-curve", "--gamma-grid", "0:1:0"}).code, kExitBadConfig);
    EXPECT_EQ(run({"fuzz", "--n", "5"}).code, kExitBadConfig);
    EXPECT_EQ(run({"gain", "--builtin", "ghz-noise", "--n", "4"}).code, kExitBadConfig);
    EXPECT_EQ(run({"gain", "--builtin", "ghz-noise", "--strategy", "theorem2"}).code, kExitBadConfig);
}

TEST(cli, sweep_matches_closed_forms) {
    const auto r = run({"sweep-ghz", "--n", "3,4,5", "--beta-grid", "0:1:5", "--gamma-grid", "0,0.5,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows[0], (std::vector<std::string>{"n", "beta", "gamma", "total", "rbc", "rbc_ic", "rbc_c", "gain",
                                                 "ratio", "rbc_fraction_after"}));
    ASSERT_EQ(rows.size(), 1u + 3 * 5 * 3);
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const auto &row = rows[k];
        const double n = num(row[0]), beta = num(row[1]), gamma = num(row[2]);
        const double big = root(0.6 + 0.1 * n, gamma), small = root(0.4 + 0.1 * n, gamma);
        EXPECT_NEAR(num(row[3]), 2 * beta * big, 1e-10);
        EXPECT_NEAR(num(row[4]), 2 * beta * big, 1e-10);
        EXPECT_NEAR(num(row[5]), beta * (big + small), 1e-10);
        EXPECT_NEAR(num(row[6]), beta * (big - small), 1e-10);
        EXPECT_NEAR(num(row[7]), (1.2 + 0.2 * n) * beta, 1e-10);
        if (beta == 0) {
            for (std::size_t c = 3; c < row.size(); ++c) {
                EXPECT_EQ(row[c], "0");
            }
        } else {
            EXPECT_NEAR(num(row[8]), (1.2 + 0.2 * n) / (2 * big), 1e-10);
            EXPECT_NEAR(num(row[9]), 1 - (1.2 + 0.2 * n) / (2 * big), 1e-10);
            EXPECT_GT(num(row[5]), num(row[6]));
        }
        if (gamma == 0 && beta > 0) {
            EXPECT_NEAR(num(row[8]), 1.0, 1e-12);
        }
    }
}

TEST(cli, sweep_components_are_linear_in_beta) {
    const auto rows = parse_csv(run({"sweep-ghz", "--n", "3", "--beta-grid", "0:1:11", "--gamma-grid", "0.5"}).out);
    ASSERT_EQ(rows.size(), 12u);
    const double ic_slope = num(rows[11][5]);
    const double c_slope = num(rows[11][6]);
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const double beta = num(rows[k][1]);
        EXPECT_NEAR(num(rows[k][5]), ic_slope * beta, 1e-12);
        EXPECT_NEAR(num(rows[k][6]), c_slope * beta, 1e-12);
    }
}

TEST(cli, ratio_curve) {
    const auto r = run({"ratio-curve", "--n", "3", "--gamma-grid", "0,0.5"});
    ASSERT_EQ(r.code, 0);
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"gamma", "ratio"}));
    EXPECT_EQ(rows[1][1], "1");
    EXPECT_NEAR(num(rows[2][1]), 1.8 / (2 * std::sqrt(0.81 + 0.25)), 1e-12);
}

TEST(cli, csv_numbers_round_trip) {
    EXPECT_EQ(format_fixed_digits(0.1), "0.10000000000000001");
    EXPECT_EQ(format_fixed_digits(-0.0), "0");
    EXPECT_EQ(format_fixed_digits(1.0), "1");
    Rng rng(5);
    for (int k = 0; k < 1000; ++k) {
        const double x = rng.normal() * std::pow(10.0, rng.uniform(-12, 12));
        ASSERT_EQ(num(format_fixed_digits(x)), x);
        ASSERT_EQ(num(format_shortest(x)), x);
    }
}

TEST(cli, grid_syntax) {
    EXPECT_EQ(parse_grid("0:1:5", "g"), (std::vector<double>{0, 0.25, 0.5, 0.75, 1}));
    EXPECT_EQ(parse_grid("0.3:7:1", "g"), (std::vector<double>{0.3}));
    EXPECT_TRUE(parse_grid("0:1:0", "g").empty());
    EXPECT_EQ(parse_grid("0, 0.5,1", "g"), (std::vector<double>{0, 0.5, 1}));
    EXPECT_THROW(parse_grid("0:1", "g"), ParseError);
    EXPECT_THROW(parse_grid("0:1:-2", "g"), ParseError);
    EXPECT_THROW(parse_grid("", "g"), ParseError);
}

TEST(cli, counterexamples_reproduce) {
    const auto r = run({"counterexamples", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_TRUE(j["reproduced"].get<bool>());
    ASSERT_EQ(j["relations"].size(), 18u);
    ASSERT_EQ(j["violations"].size(), 3u);
    const char *expected[3] = {"EX2-1", "EX2-2", "EX2-3"};
    for (std::size_t k = 0; k < 3; ++k) {
        const auto &v = j["violations"][k];
        EXPECT_EQ(v["label"], expected[k]);
        EXPECT_LT(v["slack"].get<double>(), 0.0);
        EXPECT_EQ(v["state"]["n"], 3);
        EXPECT_EQ(v["gamma"].get<double>(), 0.0);
    }
    for (const auto &row : j["relations"]) {
        if (row["relation"].get<std::string>().rfind("EX2", 0) == 0 && row["slack"].get<double>() < 0) {
            EXPECT_GT(row["gamma_c"].get<double>(), 0.0);
        }
    }
}

TEST(cli, counterexamples_above_every_critical_gamma) {
    const auto r = run({"counterexamples", "--gamma", "1.5", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    EXPECT_TRUE(j["violations"].empty());
    for (const auto &row : j["relations"]) {
        EXPECT_GE(row["slack"].get<double>(), -1e-10);
    }
}

TEST(cli, counterexamples_table_and_csv) {
    const auto table = run({"counterexamples"});
    EXPECT_EQ(table.code, 0);
    EXPECT_NE(table.out.find("reproduced"), std::string::npos);
    const auto csv = parse_csv(run({"counterexamples", "--format", "csv"}).out);
    EXPECT_EQ(csv[0], (std::vector<std::string>{"state", "relation", "lhs", "rhs", "slack", "status", "gamma_c"}));
    EXPECT_EQ(csv.size(), 19u);
}

TEST(cli, fuzz_three_qubits) {
    const auto r = run({"fuzz", "--n", "3", "--samples", "10000", "--seed", "42", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = Json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    for (const auto &rel : j["relations"]) {
        EXPECT_EQ(rel["violations"], 0);
        if (rel["relation"].get<std::string>().rfind("T5", 0) == 0) {
            EXPECT_GE(rel["min_slack"].get<double>(), 0.0);
        }
    }
}

TEST(cli, fuzz_is_deterministic) {
    for (const char *format : {"table", "json", "csv"}) {
        const std::vector<std::string> args{"fuzz", "--n", "4", "--samples", "500", "--seed", "9", "--format", format};
        EXPECT_EQ(run(args).out, run(args).out);
    }
    EXPECT_NE(run({"fuzz", "--n", "2", "--samples", "50", "--seed", "1"}).out,
              run({"fuzz", "--n", "2", "--samples", "50", "--seed", "2"}).out);
}

TEST(cli, fuzz_without_samples_passes_vacuously) {
    const auto r = run({"fuzz", "--n", "2", "--samples", "0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("no violations"), std::string::npos);
}

TEST(cli, gain_on_bell_diagonal) {
    const auto r = run({"gain", "--builtin", "bell-diagonal", "--strategy", "theorem-pattern", "--eps", "0.5,0.3",
                        "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["permutation"], (std::vector<int>{0, 3, 2, 1}));
    EXPECT_NEAR(j["marginals_after"][0].get<double>(), 0.1, 1e-12);
    EXPECT_NEAR(j["marginals_after"][1].get<double>(), 0.3, 1e-12);
    EXPECT_NEAR(j["total_after"].get<double>(), j["total_before"].get<double>(), 1e-10);

    const auto best = Json::parse(run({"gain", "--builtin", "bell-diagonal", "--format", "json"}).out);
    EXPECT_GE(best["gain"].get<double>(), j["gain"].get<double>() - 1e-10);
    EXPECT_EQ(run({"gain", "--builtin", "bell-diagonal", "--strategy", "theorem2"}).code, 0);
    EXPECT_EQ(run({"gain", "--builtin", "ex2-rho2", "--format", "csv"}).code, 0);
}

TEST(cli, output_file) {
    const auto path = scratch("curve.csv");
    std::filesystem::remove(path);
    const auto r = run({"ratio-curve", "--gamma-grid", "0", "--out", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    EXPECT_EQ(content.str(), "gamma,ratio\n0,1\n");
    EXPECT_EQ(run({"ratio-curve", "--out", "/nonexistent-dir/x.csv"}).code, kExitBadConfig);
}

TEST(cli, help_succeeds) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("0.5, 0.3"), std::string::npos);
}
