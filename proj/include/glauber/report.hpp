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

#pragma once

// JSON serialisation of discrepancy records and verification reports.

#include <cmath>
#include <optional>
#include <string>

#include "json.hpp"

#include "glauber/discrepancy.hpp"
#include "glauber/sweep.hpp"
#include "glauber/verify.hpp"

namespace glauber {

namespace detail {
inline nlohmann::json optional_number(const std::optional<double> &x) {
    if (x && std::isfinite(*x)) {
        return *x;
    }
    return nullptr;
}
}  // namespace detail

inline nlohmann::json to_json(const DiscrepancyRecord &r) {
    return {
        {"quantity", r.quantity},
        {"component", r.component},
        {"p", r.p},
        {"n", r.n},
        {"m", r.m},
        {"gamma", detail::optional_number(r.gamma)},
        {"numeric", detail::optional_number(r.numeric)},
        {"paper", detail::optional_number(r.paper)},
        {"abs_diff", detail::optional_number(r.abs_diff)},
        {"verdict", std::string(to_string(r.verdict))},
    };
}

inline nlohmann::json to_json(const OracleCheck &c) {
    return {
        {"name", c.name},
        {"passed", c.passed},
        {"max_error", detail::optional_number(c.max_error)},
        {"tolerance", c.tolerance},
        {"samples", c.samples},
    };
}

inline nlohmann::json to_json(const ComparisonGrid &g) {
    return {{"p", g.p}, {"n", g.n}, {"m", g.m}, {"gamma", g.gamma}};
}

inline nlohmann::json to_json(const VerifyReport &report) {
    nlohmann::json grid = to_json(report.grid);
    grid["name"] = report.grid_name;

    nlohmann::json checks = nlohmann::json::array();
    for (const auto &c : report.checks) {
        checks.push_back(to_json(c));
    }
    nlohmann::json records = nlohmann::json::array();
    for (const auto &r : report.discrepancies) {
        records.push_back(to_json(r));
    }
    const auto passed = std::count_if(report.checks.begin(), report.checks.end(),
                                      [](const OracleCheck &c) { return c.passed; });
    return {
        {"grid", grid},
        {"oracle_checks", checks},
        {"discrepancies", records},
        {"summary",
         {{"checks_passed", passed},
          {"checks_total", report.checks.size()},
          {"match", report.count(Verdict::Match)},
          {"mismatch", report.count(Verdict::Mismatch)},
          {"undefined", report.count(Verdict::Undefined)}}},
    };
}

/// Sweep rows as an array of objects; undefined values become null.
inline nlohmann::json sweep_json(const std::vector<SweepRow> &rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &r : rows) {
        out.push_back({
            {"p", r.p},
            {"n", r.n},
            {"m", r.m},
            {"gamma", detail::optional_number(r.gamma)},
            {"quantity", std::string(to_string(r.quantity))},
            {"method", r.method},
            {"value", detail::optional_number(r.value)},
        });
    }
    return out;
}

}  // namespace glauber
