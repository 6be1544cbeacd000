// Copyright 2026 The glauber-lqfi Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "glauber/cli.hpp"
#include "glauber/format.hpp"
#include "glauber/sweep.hpp"
#include "json.hpp"

namespace glauber {
namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(std::initializer_list<std::string> args) {
    std::vector<std::string> storage{"glauber"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &s : storage) argv.push_back(s.c_str());
    std::ostringstream out, err;
    CliResult r;
    r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::string slurp(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class TempDir : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("glauber_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::remove_all(dir_);
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }
    std::filesystem::path dir_;
};

TEST(Format, FixedAndSignificant) {
    EXPECT_EQ(format_fixed12(0.5), "0.500000000000");
    EXPECT_EQ(format_fixed12(-0.0), "0.000000000000");
    EXPECT_EQ(format_sig12(0.5), "0.500000000000");
    EXPECT_EQ(format_sig12(1.0), "1.00000000000");
    EXPECT_EQ(format_sig12(1e-20), "1.00000000000e-20");
    EXPECT_EQ(format_sig12_or_undefined(std::nullopt), "undefined");
}

TEST(AxisGrid, ParseAndValues) {
    const auto g = AxisGrid::parse("0:1:0.5");
    EXPECT_EQ(g.values(), (std::vector<double>{0.0, 0.5, 1.0}));
    EXPECT_EQ(AxisGrid::parse("0:1:0.1").values().size(), 11U);
    EXPECT_EQ(AxisGrid::parse("0.2:0.2:0.1").values(), (std::vector<double>{0.2}));
    EXPECT_EQ(AxisGrid::parse("0:1:0.3").values().size(), 4U);
    EXPECT_EQ(AxisGrid::parse("0:1:0.1").values().back(), 1.0);
}

TEST(AxisGrid, RejectsMalformed) {
    EXPECT_THROW(AxisGrid::parse("0:1"), Error);
    EXPECT_THROW(AxisGrid::parse("0:1:0"), Error);
    EXPECT_THROW(AxisGrid::parse("1:0:0.1"), Error);
    EXPECT_THROW(AxisGrid::parse("a:1:0.1"), Error);
    EXPECT_THROW(AxisGrid::parse("0:2:0.1").validate_unit(), Error);
}

TEST(Sweep, RowOrderNumericFirst) {
    SweepSpec spec;
    spec.quantity = Quantity::LquDc;
    spec.method = MethodSelection::Both;
    spec.p_grid = AxisGrid::parse("0:1:0.5");
    spec.gamma_values = std::vector<double>{0.0, 1.0};
    spec.n_list = {4, 3};
    spec.m_list = {1, 0};
    const auto rows = run_sweep(spec, 4);
    ASSERT_EQ(rows.size(), 3U * 2 * 2 * 2 * 2);
    EXPECT_EQ(rows[0].m, 1);
    EXPECT_EQ(rows[0].n, 4);
    EXPECT_EQ(rows[0].method, "numeric");
    EXPECT_EQ(rows[1].method, "paper");
    EXPECT_EQ(rows[2].gamma, 1.0);
}

TEST(Sweep, ParallelMatchesSerial) {
    SweepSpec spec;
    spec.quantity = Quantity::Lqfi;
    spec.method = MethodSelection::Both;
    spec.p_grid = AxisGrid::parse("0:1:0.05");
    spec.n_list = {3, 5, 25};
    spec.m_list = {0, 1};
    std::ostringstream serial, parallel;
    write_csv(serial, run_sweep(spec, 1));
    write_csv(parallel, run_sweep(spec, 7));
    EXPECT_EQ(serial.str(), parallel.str());
}

TEST(Sweep, NumericValuesInUnitInterval) {
    for (auto q : {Quantity::Lqfi, Quantity::Lqu}) {
        SweepSpec spec;
        spec.quantity = q;
        spec.p_grid = AxisGrid::parse("0:1:0.02");
        spec.n_list = {3, 4, 10, 25};
        spec.m_list = {0, 1};
        for (const auto &row : run_sweep(spec)) {
            ASSERT_TRUE(row.value.has_value());
            ASSERT_GE(*row.value, -1e-9);
            ASSERT_LE(*row.value, 1.0 + 1e-9);
        }
    }
}

TEST(Cli, ValueExamples) {
    auto r = run_cli({"value", "--quantity", "lqfi", "--p", "0", "--n", "3", "--m", "0", "--method", "both"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "numeric 0.000000000000\npaper 0.500000000000\n");
    r = run_cli({"value", "--quantity", "lqu", "--p", "1", "--n", "4", "--m", "0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0.000000000000\n");
    r = run_cli({"value", "--quantity", "qfi", "--p", "0", "--n", "4", "--m", "0", "--split-k", "1", "--generator", "z"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "4.000000000000\n");
}

TEST(Cli, ValueAlternativeParametrizations) {
    const auto by_gamma = run_cli({"value", "--quantity", "lqu-dc", "--p", "0.5", "--n", "4", "--gamma", "0.5"});
    const auto by_time = run_cli(
        {"value", "--quantity", "lqu-dc", "--p", "0.5", "--n", "4", "--decay-rate", "1", "--time", "0.69314718055994531"});
    EXPECT_EQ(by_gamma.code, 0);
    EXPECT_EQ(by_gamma.out, by_time.out);
    const auto by_alpha = run_cli({"value", "--quantity", "lqfi", "--alpha", "0", "--n", "4"});
    const auto by_p = run_cli({"value", "--quantity", "lqfi", "--p", "1", "--n", "4"});
    EXPECT_EQ(by_alpha.out, by_p.out);
}

TEST(Cli, ValueStrictPassesOnCorrectBuild) {
    const auto r = run_cli({"value", "--quantity", "lqfi", "--p", "0.5", "--n", "4", "--m", "1", "--strict"});
    EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, ValueStrictCatchesBrokenMMatrix) {
    const auto r = run_cli(
        {"value", "--quantity", "lqfi", "--p", "1", "--n", "4", "--m", "0", "--strict", "--m-matrix", "printed"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("strict"), std::string::npos);
}

TEST(Cli, UsageErrorsExitOne) {
    EXPECT_EQ(run_cli({}).code, 1);
    EXPECT_EQ(run_cli({"value", "--p", "0.5"}).code, 1);
    EXPECT_EQ(run_cli({"value", "--quantity", "nope", "--p", "0.5"}).code, 1);
    EXPECT_EQ(run_cli({"value", "--quantity", "lqfi", "--p", "1.5"}).code, 1);
    EXPECT_EQ(run_cli({"value", "--quantity", "lqfi", "--p", "0.5", "--n", "2"}).code, 1);
    EXPECT_EQ(run_cli({"value", "--quantity", "lqfi-dc", "--p", "0.5"}).code, 1);
    EXPECT_EQ(run_cli({"value", "--quantity", "lqfi", "--p", "0.5", "--gamma", "0.2"}).code, 1);
    EXPECT_EQ(run_cli({"value", "--quantity", "lqfi", "--p", "0.5", "--alpha", "1"}).code, 1);
    EXPECT_EQ(run_cli({"sweep", "--quantity", "lqfi", "--gamma-grid", "0:1:0.5"}).code, 1);
    EXPECT_EQ(run_cli({"sweep", "--quantity", "lqu-dc"}).code, 1);
    EXPECT_EQ(run_cli({"sweep", "--quantity", "lqfi", "--p-grid", "0:1:0"}).code, 1);
    EXPECT_EQ(run_cli({"figure", "fig9"}).code, 1);
    EXPECT_EQ(run_cli({"verify", "--grid", "medium"}).code, 1);
}

TEST(Cli, HelpOnEverySubcommand) {
    for (const char *sub : {"value", "sweep", "figure", "verify"}) {
        const auto r = run_cli({sub, "--help"});
        EXPECT_EQ(r.code, 0) << sub;
        EXPECT_NE(r.out.find("--"), std::string::npos) << sub;
    }
}

TEST(Cli, SweepRowCountAndHeader) {
    const auto r = run_cli({"sweep", "--quantity", "lqfi", "--p-grid", "0:1:0.5", "--n-list", "3", "--m-list", "0"});
    EXPECT_EQ(r.code, 0);
    const auto lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 4U);
    EXPECT_EQ(lines[0], "p,n,m,gamma,quantity,method,value");
    EXPECT_EQ(lines[1].rfind("0.00000000000,3,0,,lqfi,numeric,", 0), 0U);
    EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Cli, SweepBothPairsRows) {
    const auto r = run_cli({"sweep", "--quantity", "lqu", "--method", "both", "--p-grid", "0:1:0.25", "--n-list", "3,4",
                            "--m-list", "0,1"});
    EXPECT_EQ(r.code, 0);
    const auto lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 1U + 5 * 2 * 2 * 2);
    for (std::size_t i = 1; i < lines.size(); i += 2) {
        EXPECT_NE(lines[i].find(",numeric,"), std::string::npos);
        EXPECT_NE(lines[i + 1].find(",paper,"), std::string::npos);
    }
}

TEST(Cli, SweepQfiPaperUndefinedWithoutSplit) {
    const auto r = run_cli({"sweep", "--quantity", "qfi", "--method", "paper", "--p-grid", "0:1:1"});
    EXPECT_EQ(r.code, 0);
    const auto lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 3U);
    EXPECT_NE(lines[1].find(",undefined"), std::string::npos);
}

TEST(Cli, SweepTimeGrid) {
    const auto r = run_cli({"sweep", "--quantity", "lqfi-dc", "--p-grid", "0.5:0.5:0.1", "--decay-rate", "1",
                            "--time-grid", "0:2:1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines_of(r.out).size(), 4U);
}

TEST_F(TempDir, SweepFileIsDeterministic) {
    const auto a = (dir_ / "a.csv").string();
    const auto b = (dir_ / "b.csv").string();
    for (const auto &path : {a, b}) {
        const auto r = run_cli({"sweep", "--quantity", "lqfi-dc", "--method", "both", "--p-grid", "0:1:0.1",
                                "--gamma-grid", "0:1:0.25", "--n-list", "3,25", "--m-list", "0,1", "--output", path,
                                "--jobs", path == a ? "1" : "5"});
        ASSERT_EQ(r.code, 0) << r.err;
    }
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_FALSE(slurp(a).empty());
}

TEST_F(TempDir, SweepJsonFormat) {
    const auto path = (dir_ / "s.json").string();
    const auto r = run_cli({"sweep", "--quantity", "lqfi", "--method", "both", "--p-grid", "0:1:0.5", "--format",
                            "json", "--output", path});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(slurp(path));
    ASSERT_EQ(doc.size(), 6U);
    EXPECT_EQ(doc[0]["method"], "numeric");
    EXPECT_EQ(doc[1]["value"], 0.5);
    EXPECT_TRUE(doc[0]["gamma"].is_null());
}

TEST_F(TempDir, UnwritableOutputExitsOne) {
    const auto r = run_cli({"sweep", "--quantity", "lqfi", "--output", (dir_ / "missing" / "x.csv").string()});
    EXPECT_EQ(r.code, 1);
}

TEST_F(TempDir, FigureFilesAndCounts) {
    auto r = run_cli({"figure", "fig1", "--outdir", dir_.string(), "--resolution", "11"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines_of(slurp(dir_ / "fig1.csv")).size(), 1U + 5 * 11 * 2);
    r = run_cli({"figure", "fig7", "--outdir", dir_.string(), "--resolution", "11"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (int n : {3, 4, 5, 25}) {
        const auto lines = lines_of(slurp(dir_ / ("fig7_n" + std::to_string(n) + ".csv")));
        ASSERT_EQ(lines.size(), 1U + 11 * 11 * 2);
    }
}

TEST(Figures, CatalogShape) {
    const auto catalog = figure_catalog();
    ASSERT_EQ(catalog.size(), 8U);
    EXPECT_EQ(figure_files(find_figure("fig2"), 101).size(), 1U);
    const auto surfaces = figure_files(find_figure("fig6"), 101);
    ASSERT_EQ(surfaces.size(), 4U);
    EXPECT_EQ(surfaces[3].name, "fig6_n25.csv");
    EXPECT_EQ(surfaces[0].spec.m_list, std::vector<int>{1});
    EXPECT_EQ(surfaces[0].spec.gamma_values->size(), 101U);
}

TEST(Cli, VerifyWithBrokenMMatrixExitsTwo) {
    const auto r = run_cli({"verify", "--grid", "coarse", "--m-matrix", "printed", "--directions", "2000", "--strict"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("zero-on-classical"), std::string::npos);
}

}  // namespace
}  // namespace glauber
