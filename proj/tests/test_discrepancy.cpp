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

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "glauber/correlations.hpp"
#include "glauber/dephasing.hpp"
#include "glauber/discrepancy.hpp"
#include "glauber/report.hpp"

namespace glauber {
namespace {

class CoarseComparison : public ::testing::Test {
  protected:
    static void SetUpTestSuite() { records_ = new std::vector<DiscrepancyRecord>(compare_all(ComparisonGrid::coarse())); }
    static void TearDownTestSuite() {
        delete records_;
        records_ = nullptr;
    }
    static const std::vector<DiscrepancyRecord> &records() { return *records_; }

    static const DiscrepancyRecord &find(std::string_view family, double p, int n, int m) {
        for (const auto &r : records()) {
            if (r.quantity == family && r.p == p && r.n == n && r.m == m) {
                return r;
            }
        }
        throw std::runtime_error("record not found");
    }

  private:
    static std::vector<DiscrepancyRecord> *records_;
};

std::vector<DiscrepancyRecord> *CoarseComparison::records_ = nullptr;

TEST(MakeRecord, VerdictThreshold) {
    const ModelParams params{0.5, 3, 0};
    EXPECT_EQ(make_record("x", "c", params, std::nullopt, 0.3, 0.3 + 5e-9).verdict, Verdict::Match);
    EXPECT_EQ(make_record("x", "c", params, std::nullopt, 0.3, 0.3 + 2e-8).verdict, Verdict::Mismatch);
    EXPECT_EQ(make_record("x", "c", params, std::nullopt, 0.3, std::nullopt).verdict, Verdict::Undefined);
    const auto inf = make_record("x", "c", params, 0.5, 0.3, std::numeric_limits<double>::infinity());
    EXPECT_EQ(inf.verdict, Verdict::Undefined);
    EXPECT_FALSE(inf.paper.has_value());
    EXPECT_FALSE(inf.abs_diff.has_value());
}

TEST(Verdict, Names) {
    EXPECT_EQ(to_string(Verdict::Match), "MATCH");
    EXPECT_EQ(to_string(Verdict::Mismatch), "MISMATCH");
    EXPECT_EQ(to_string(Verdict::Undefined), "UNDEFINED");
}

TEST(Comparators, LimitPointDisagreements) {
    for (int m = 0; m <= 1; ++m) {
        const auto q = compare_lqfi({0.0, 3, m});
        EXPECT_EQ(q.verdict, Verdict::Mismatch);
        EXPECT_NEAR(*q.paper, 0.5, 1e-15);
        EXPECT_LT(std::abs(*q.numeric), 1e-12);
        const auto u = compare_lqu({0.0, 3, m});
        EXPECT_EQ(u.verdict, Verdict::Mismatch);
        EXPECT_NEAR(*u.paper, 1.0 - 1.0 / (2.0 * std::sqrt(2.0)), 1e-12);
    }
    const auto unit = compare_lqfi({1.0, 5, 0});
    EXPECT_EQ(unit.verdict, Verdict::Mismatch);
    EXPECT_NEAR(*unit.paper, 1.0, 1e-15);
}

TEST(Comparators, EigenvalueFamily) {
    EXPECT_EQ(compare_rho12_eigs({0.0, 3, 0}).verdict, Verdict::Undefined);
    EXPECT_EQ(compare_rho12_eigs({0.5, 3, 0}).verdict, Verdict::Mismatch);
    EXPECT_EQ(compare_rho12_eigs({1.0 - 1e-9, 3, 0}).verdict, Verdict::Match);
}

TEST(Comparators, NumericSideIsOracleOutputBitForBit) {
    const ModelParams params{0.5, 4, 1};
    EXPECT_EQ(*compare_lqfi(params).numeric, lqfi(rho12(params)).value);
    EXPECT_EQ(*compare_lqu(params).numeric, lqu(rho12(params)).value);
    EXPECT_EQ(*compare_lqfi_dc(params, 0.3).numeric, lqfi(dephase_rho12_closed(params, 0.3)).value);
    EXPECT_EQ(*compare_lqu_dc(params, 0.3).numeric, lqu(dephase_rho12_closed(params, 0.3)).value);
}

TEST(Comparators, DephasedReferencePointCarriesBothSides) {
    const auto q = compare_lqfi_dc({0.5, 4, 1}, 0.3);
    EXPECT_TRUE(q.numeric.has_value());
    EXPECT_TRUE(q.paper.has_value());
    EXPECT_EQ(q.gamma, 0.3);
    const auto u = compare_lqu_dc({0.5, 4, 1}, 0.3);
    EXPECT_TRUE(u.numeric.has_value());
    EXPECT_TRUE(u.paper.has_value());
}

TEST(Comparators, FullyDephasedNumericSideVanishes) {
    for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        EXPECT_LT(std::abs(*compare_lqfi_dc({p, 4, 0}, 1.0).numeric), 1e-8);
        EXPECT_LT(std::abs(*compare_lqu_dc({p, 4, 0}, 1.0).numeric), 1e-8);
    }
}

TEST_F(CoarseComparison, CoversEveryFamilyAtEveryPoint) {
    // 40 model points x 3 undephased families + 200 (point, gamma) pairs x 3.
    EXPECT_EQ(records().size(), 720U);
    for (auto family : family::kAll) {
        const auto count = std::count_if(records().begin(), records().end(),
                                         [&](const DiscrepancyRecord &r) { return r.quantity == family; });
        EXPECT_EQ(count, family::is_dephased(family) ? 200 : 40) << family;
    }
}

TEST_F(CoarseComparison, SortedAndDefinedRecordsCarryVerdicts) {
    EXPECT_TRUE(std::is_sorted(records().begin(), records().end(), record_less));
    for (const auto &r : records()) {
        if (r.numeric && r.paper) {
            EXPECT_NE(r.verdict, Verdict::Undefined);
            EXPECT_EQ(r.verdict == Verdict::Match, *r.abs_diff < kMatchThreshold);
        } else {
            EXPECT_EQ(r.verdict, Verdict::Undefined);
        }
        EXPECT_EQ(r.gamma.has_value(), family::is_dephased(r.quantity));
    }
}

TEST_F(CoarseComparison, OrthogonalOverlapRowsMismatch) {
    for (int n : {3, 4, 5, 25}) {
        for (int m = 0; m <= 1; ++m) {
            EXPECT_EQ(find(family::kLqfi, 0.0, n, m).verdict, Verdict::Mismatch);
            EXPECT_EQ(find(family::kOmegas, 0.0, n, m).verdict, Verdict::Mismatch);
            EXPECT_EQ(find(family::kEigs, 0.0, n, m).verdict, Verdict::Undefined);
        }
    }
}

TEST_F(CoarseComparison, Deterministic) {
    const auto again = compare_all(ComparisonGrid::coarse(), 3);
    ASSERT_EQ(again.size(), records().size());
    nlohmann::json a = nlohmann::json::array();
    nlohmann::json b = nlohmann::json::array();
    for (std::size_t i = 0; i < again.size(); ++i) {
        a.push_back(to_json(records()[i]));
        b.push_back(to_json(again[i]));
    }
    EXPECT_EQ(a.dump(), b.dump());
}

TEST(Report, JsonShape) {
    VerifyReport report;
    report.grid_name = "coarse";
    report.grid = ComparisonGrid::coarse();
    report.checks.push_back({"example-check", true, 1e-15, 1e-12, 3});
    report.discrepancies.push_back(compare_lqfi({0.0, 3, 0}));
    report.discrepancies.push_back(compare_rho12_eigs({0.0, 3, 0}));
    const auto doc = to_json(report);
    EXPECT_EQ(doc["grid"]["name"], "coarse");
    EXPECT_EQ(doc["oracle_checks"][0]["name"], "example-check");
    EXPECT_EQ(doc["oracle_checks"][0]["passed"], true);
    EXPECT_EQ(doc["discrepancies"][0]["verdict"], "MISMATCH");
    EXPECT_EQ(doc["discrepancies"][0]["paper"], 0.5);
    EXPECT_TRUE(doc["discrepancies"][1]["paper"].is_null());
    EXPECT_TRUE(doc["discrepancies"][1]["gamma"].is_null());
    EXPECT_EQ(doc["summary"]["mismatch"], 1);
    EXPECT_EQ(doc["summary"]["undefined"], 1);
}

}  // namespace
}  // namespace glauber
