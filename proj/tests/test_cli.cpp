// Copyright 2026 The hfrac authors
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

/// @file test_cli.cpp
/// @brief End-to-end tests of the command-line tool: documented output
///        bytes, exit codes, JSON schemas, determinism, and the order cap.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "hfrac/euler.hpp"
#include "hfrac/io.hpp"
#include "hfrac/rational.hpp"
#include "hfrac/series.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

/// Runs the installed binary with the given arguments through the shell,
/// capturing stdout; stderr is discarded unless merge_stderr is set.
RunResult run_cli(const std::string& args, bool merge_stderr = false,
                  const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + std::string(HFRAC_CLI_PATH) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr) << cmd;
    RunResult r;
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

TEST(CliTest, EulerTableMatchesDocumentedExample) {
    const RunResult r = run_cli("euler --n 9");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "1 1 1 2 5 16 61 272 1385 7936\n");
}

TEST(CliTest, HankelRowMatchesDocumentedExample) {
    const RunResult r = run_cli("hankel --series euler --max 4");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "1 1 0 -1 -9\n");
}

TEST(CliTest, QAnalogTablesMatchDocumentedValues) {
    const RunResult polys = run_cli("qeuler --n 6");
    EXPECT_EQ(polys.exit_code, 0);
    EXPECT_EQ(polys.out,
              "1\n1\n1\n2\n4 + q\n9 + 5*q + 2*q^2\n21 + 20*q + 14*q^2 + 5*q^3 + q^4\n");
    const RunResult at_minus_one = run_cli("qeuler --n 9 --q=-1");
    EXPECT_EQ(at_minus_one.exit_code, 0);
    EXPECT_EQ(at_minus_one.out, "1 1 1 2 3 6 11 24 51 122\n");
}

TEST(CliTest, LadderExpansionShowsPeriodicPattern) {
    const RunResult r = run_cli("hfrac --series euler --order 12");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out,
              "delta 2\n"
              "v_0 = 1  k_0 = 0  u_1 = -1\n"
              "v_1 = 1  k_1 = 1  u_2 = -2 - 4*x\n"
              "v_2 = 9  k_2 = 0  u_3 = -5\n"
              "v_3 = 4  k_3 = 0  u_4 = -7\n");
}

TEST(CliTest, PermStatsTableShowsAllFourFamilies) {
    const RunResult r = run_cli("perm-stats --n 4");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "1 1 1 1 1\n2 0 1 1 1\n3 2 2 2 2\n4 0 5 5 5\n");
    const RunResult w2 = run_cli("perm-stats --n 4 --weight W2");
    EXPECT_EQ(w2.exit_code, 0);
    EXPECT_EQ(w2.out, "1 1 2 5\n");
}

TEST(CliTest, VerifyPassesForRegisteredIds) {
    for (const std::string id : {"Thm1.1", "F10", "H7"}) {
        const RunResult r = run_cli("verify --id " + id);
        EXPECT_EQ(r.exit_code, 0) << id;
        EXPECT_EQ(r.out, "PASS\n") << id;
    }
}

TEST(CliTest, UsageErrorsExitWithTwo) {
    EXPECT_EQ(run_cli("").exit_code, 2);
    EXPECT_EQ(run_cli("verify").exit_code, 2);
    EXPECT_EQ(run_cli("verify --id F1 --all").exit_code, 2);
    EXPECT_EQ(run_cli("verify --id no-such-id").exit_code, 2);
    EXPECT_EQ(run_cli("euler").exit_code, 2);           // --n is required
    EXPECT_EQ(run_cli("euler --n -3").exit_code, 2);    // negative bound
    EXPECT_EQ(run_cli("euler --n 3 --format xml").exit_code, 2);
    EXPECT_EQ(run_cli("hankel --max 2").exit_code, 2);  // needs --series or --in
    EXPECT_EQ(run_cli("perm-stats --n 3 --weight W9").exit_code, 2);
    const RunResult merged = run_cli("verify --id no-such-id", /*merge_stderr=*/true);
    EXPECT_NE(merged.out.find("unknown id"), std::string::npos);
}

TEST(CliTest, JsonOutputsFollowDocumentedSchemas) {
    const RunResult seq = run_cli("euler --n 5 --json");
    EXPECT_EQ(seq.exit_code, 0);
    EXPECT_EQ(seq.out, "{\"name\":\"euler\",\"values\":[\"1\",\"1\",\"1\",\"2\",\"5\",\"16\"]}\n");

    const RunResult rep = run_cli("verify --id F1 --json");
    EXPECT_EQ(rep.exit_code, 0);
    const auto doc = nlohmann::json::parse(rep.out);
    EXPECT_EQ(doc.at("id"), "F1");
    EXPECT_EQ(doc.at("status"), "PASS");
    EXPECT_TRUE(doc.at("first_mismatch").is_null());
    EXPECT_TRUE(doc.at("elapsed_ms").is_number_integer());

    // --format json selects the same rendering as --json.
    const RunResult fmt = run_cli("euler --n 5 --format json");
    EXPECT_EQ(fmt.out, seq.out);

    const RunResult ladder = run_cli("hfrac --series euler --order 12 --json");
    const auto lad = nlohmann::json::parse(ladder.out);
    EXPECT_EQ(lad.at("delta"), 2);
    ASSERT_GE(lad.at("levels").size(), 3u);
    EXPECT_EQ(lad.at("levels")[2].at("v"), "9");
}

TEST(CliTest, TextOutputIsByteDeterministic) {
    for (const std::string args :
         {std::string("hfrac --series euler --order 12"), std::string("verify --id F3"),
          std::string("hankel --series tangent --max 3")}) {
        const RunResult first = run_cli(args);
        const RunResult second = run_cli(args);
        EXPECT_EQ(first.exit_code, second.exit_code) << args;
        EXPECT_EQ(first.out, second.out) << args;
    }
}

TEST(CliTest, SeriesFileFeedsTheSamePipelines) {
    // Write the coefficient list E_0..E_8 in the series schema and reuse it
    // through --in; the determinants must match the named-series route.
    const auto e = hfrac::euler_numbers(8);
    const auto s = hfrac::TruncatedSeries<hfrac::Rational>::generate(8, [&](long n) {
        return hfrac::Rational(e[static_cast<std::size_t>(n)]);
    });
    const std::string path = ::testing::TempDir() + "cli_series_input.json";
    {
        std::ofstream out(path);
        ASSERT_TRUE(out.good());
        out << hfrac::io::series_to_json(s);
    }
    const RunResult from_file = run_cli("hankel --in " + path + " --max 4");
    EXPECT_EQ(from_file.exit_code, 0);
    EXPECT_EQ(from_file.out, "1 1 0 -1 -9\n");
    // Asking for more coefficients than the file holds is a usage error.
    const RunResult too_deep = run_cli("hankel --in " + path + " --max 8");
    EXPECT_EQ(too_deep.exit_code, 2);
    std::remove(path.c_str());
}

TEST(CliTest, OrderCapGuardsExpensiveRequests) {
    const std::string cap = "HFRAC_MAX_ORDER=12 ";
    EXPECT_EQ(run_cli("euler --n 20", false, cap).exit_code, 2);
    const RunResult ok = run_cli("euler --n 10", false, cap);
    EXPECT_EQ(ok.exit_code, 0);
    EXPECT_EQ(ok.out, "1 1 1 2 5 16 61 272 1385 7936 50521\n");
    // The default verification order (30) exceeds the cap as well; bringing
    // every knob under the cap makes the same request acceptable.
    EXPECT_EQ(run_cli("verify --id F1", false, cap).exit_code, 2);
    EXPECT_EQ(run_cli("verify --id F1 --order 12", false, cap).exit_code, 0);
    // A malformed cap is reported as a usage error, not ignored.
    EXPECT_EQ(run_cli("euler --n 3", false, "HFRAC_MAX_ORDER=ten ").exit_code, 2);
}

}  // namespace
