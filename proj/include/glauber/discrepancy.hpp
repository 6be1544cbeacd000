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

// Side-by-side evaluation of the printed closed forms against the
// definitional numerics, one record per (quantity family, grid point).

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "glauber/closed_forms.hpp"
#include "glauber/coherent_model.hpp"
#include "glauber/correlations.hpp"
#include "glauber/dephasing.hpp"
#include "glauber/parallel.hpp"

namespace glauber {

inline constexpr double kMatchThreshold = 1e-8;

enum class Verdict { Match, Mismatch, Undefined };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Match: return "MATCH";
        case Verdict::Mismatch: return "MISMATCH";
        case Verdict::Undefined: return "UNDEFINED";
    }
    return "UNDEFINED";
}

namespace family {
inline constexpr std::string_view kEigs = "Eq26-eigs";
inline constexpr std::string_view kLqfi = "Eq33-LQFI";
inline constexpr std::string_view kOmegas = "Eq38-40-omegas";
inline constexpr std::string_view kDcEigs = "Eq49-50-DC-eigs";
inline constexpr std::string_view kLqfiDc = "Eq52-LQFI-DC";
inline constexpr std::string_view kLquDc = "Eq54-57-LQU-DC";

inline constexpr std::array<std::string_view, 6> kAll{kEigs, kLqfi, kOmegas, kDcEigs, kLqfiDc, kLquDc};

inline bool is_dephased(std::string_view name) { return name == kDcEigs || name == kLqfiDc || name == kLquDc; }
}  // namespace family

struct DiscrepancyRecord {
    std::string quantity;
    std::string component;
    double p = 0.0;
    int n = 3;
    int m = 0;
    std::optional<double> gamma;
    std::optional<double> numeric;
    std::optional<double> paper;
    std::optional<double> abs_diff;
    Verdict verdict = Verdict::Undefined;
};

inline DiscrepancyRecord make_record(std::string_view quantity, std::string component, const ModelParams &params,
                                     std::optional<double> gamma, std::optional<double> numeric,
                                     std::optional<double> paper) {
    DiscrepancyRecord r;
    r.quantity = std::string(quantity);
    r.component = std::move(component);
    r.p = params.p;
    r.n = params.n;
    r.m = params.m;
    r.gamma = gamma;
    if (numeric && !std::isfinite(*numeric)) {
        numeric.reset();
    }
    if (paper && !std::isfinite(*paper)) {
        paper.reset();
    }
    r.numeric = numeric;
    r.paper = paper;
    if (numeric && paper) {
        r.abs_diff = std::abs(*numeric - *paper);
        r.verdict = *r.abs_diff < kMatchThreshold ? Verdict::Match : Verdict::Mismatch;
    }
    return r;
}

namespace detail {

// Compares two equally long vectors component-wise and reports the worst
// component; any undefined entry on the printed side makes the whole record
// undefined, reported against the first such component.
inline DiscrepancyRecord compare_components(std::string_view quantity, const ModelParams &params,
                                            std::optional<double> gamma, std::span<const std::string> names,
                                            std::span<const double> numeric, std::span<const Guarded> paper) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!paper[i].defined() || !std::isfinite(paper[i].value())) {
            return make_record(quantity, names[i], params, gamma, numeric[i], std::nullopt);
        }
    }
    std::size_t worst = 0;
    double worst_diff = -1.0;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const double d = std::abs(numeric[i] - paper[i].value());
        if (d > worst_diff) {
            worst_diff = d;
            worst = i;
        }
    }
    return make_record(quantity, names[worst], params, gamma, numeric[worst], paper[worst].value());
}

}  // namespace detail

/// Printed eigenvalue pair against the X-state block spectrum (lambda3 pairs
/// with the inner-block eigenvalue, lambda4 with the outer one).
inline DiscrepancyRecord compare_rho12_eigs(const ModelParams &params) {
    const auto oracle = rho12_spectrum_oracle(params);
    const auto printed_eigs = printed::rho12_eigs_printed(params);
    const std::array<std::string, 2> names{"lambda3", "lambda4"};
    const std::array<double, 2> numeric{oracle.mu2, oracle.mu1};
    const std::array<Guarded, 2> paper{printed_eigs.lambda3, printed_eigs.lambda4};
    return detail::compare_components(family::kEigs, params, std::nullopt, names, numeric, paper);
}

inline DiscrepancyRecord compare_lqfi(const ModelParams &params) {
    return make_record(family::kLqfi, "Q", params, std::nullopt, lqfi(rho12(params)).value,
                       printed::lqfi_closed(params).optional());
}

inline DiscrepancyRecord compare_lqu(const ModelParams &params) {
    return make_record(family::kOmegas, "U", params, std::nullopt, lqu(rho12(params)).value,
                       printed::lqu_omegas_closed(params).u.optional());
}

/// Printed dephased spectrum against eigh of the dephased state, both sorted
/// ascending.
inline DiscrepancyRecord compare_dc_eigs(const ModelParams &params, double gamma) {
    const auto numeric = eigh(dephase_rho12_closed(params, gamma).rho).values;
    auto paper = printed::dc_eigs_printed(params, gamma);
    const bool all_defined = std::all_of(paper.begin(), paper.end(), [](const Guarded &g) { return g.defined(); });
    std::array<std::string, 4> names{"lambda1", "lambda2", "lambda3", "lambda4"};
    if (all_defined) {
        std::sort(paper.begin(), paper.end(), [](const Guarded &a, const Guarded &b) { return a.value() < b.value(); });
        names = {"sorted0", "sorted1", "sorted2", "sorted3"};
    }
    return detail::compare_components(family::kDcEigs, params, gamma, names, numeric, paper);
}

inline DiscrepancyRecord compare_lqfi_dc(const ModelParams &params, double gamma) {
    return make_record(family::kLqfiDc, "Q", params, gamma, lqfi(dephase_rho12_closed(params, gamma)).value,
                       printed::lqfi_dc_printed(params, gamma).optional());
}

inline DiscrepancyRecord compare_lqu_dc(const ModelParams &params, double gamma) {
    return make_record(family::kLquDc, "U", params, gamma, lqu(dephase_rho12_closed(params, gamma)).value,
                       printed::lqu_dc_printed(params, gamma).optional());
}

struct ComparisonGrid {
    std::vector<double> p;
    std::vector<int> n;
    std::vector<int> m;
    std::vector<double> gamma;

    static ComparisonGrid coarse() {
        return {{0.0, 0.25, 0.5, 0.75, 1.0}, {3, 4, 5, 25}, {0, 1}, {0.0, 0.25, 0.5, 0.75, 1.0}};
    }

    static ComparisonGrid fine() {
        ComparisonGrid g;
        for (int i = 0; i <= 20; ++i) {
            g.p.push_back(i / 20.0);
        }
        g.n = {3, 4, 5, 10, 25};
        g.m = {0, 1};
        for (int i = 0; i <= 10; ++i) {
            g.gamma.push_back(i / 10.0);
        }
        return g;
    }

    std::vector<ModelParams> model_points() const {
        std::vector<ModelParams> out;
        for (double pv : p) {
            for (int nv : n) {
                for (int mv : m) {
                    out.push_back({pv, nv, mv});
                }
            }
        }
        return out;
    }
};

inline bool record_less(const DiscrepancyRecord &a, const DiscrepancyRecord &b) {
    const double ga = a.gamma.value_or(-1.0);
    const double gb = b.gamma.value_or(-1.0);
    return std::tie(a.quantity, a.p, a.n, a.m, ga) < std::tie(b.quantity, b.p, b.n, b.m, gb);
}

/// One record per (family, grid point); undephased families are evaluated at
/// every (p, n, m), dephased ones at every (p, n, m, gamma). Sorted by family
/// name, then (p, n, m, gamma).
inline std::vector<DiscrepancyRecord> compare_all(const ComparisonGrid &grid,
                                                  std::size_t workers = default_worker_count()) {
    const auto points = grid.model_points();
    const std::size_t gammas = grid.gamma.size();
    auto per_point = parallel_map(
        points.size(),
        [&](std::size_t i) {
            const auto &params = points[i];
            std::vector<DiscrepancyRecord> rows;
            rows.reserve(3 + 3 * gammas);
            rows.push_back(compare_rho12_eigs(params));
            rows.push_back(compare_lqfi(params));
            rows.push_back(compare_lqu(params));
            for (double g : grid.gamma) {
                rows.push_back(compare_dc_eigs(params, g));
                rows.push_back(compare_lqfi_dc(params, g));
                rows.push_back(compare_lqu_dc(params, g));
            }
            return rows;
        },
        workers);

    std::vector<DiscrepancyRecord> out;
    for (auto &rows : per_point) {
        std::move(rows.begin(), rows.end(), std::back_inserter(out));
    }
    std::stable_sort(out.begin(), out.end(), record_less);
    return out;
}

}  // namespace glauber
