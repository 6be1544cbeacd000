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

// Oracle self-consistency suite: every definitional route is checked against
// an independent one over a parameter grid plus seeded random states.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "glauber/coherent_model.hpp"
#include "glauber/correlations.hpp"
#include "glauber/dephasing.hpp"
#include "glauber/discrepancy.hpp"
#include "glauber/parallel.hpp"
#include "glauber/random_states.hpp"

namespace glauber {

struct OracleCheck {
    std::string name;
    bool passed = false;
    double max_error = 0.0;
    double tolerance = 0.0;
    std::size_t samples = 0;
};

struct VerifyOptions {
    MMatrixTerms lqfi_terms = MMatrixTerms::AllPairs;
    std::size_t directions = 20000;
    std::size_t random_states = 200;
    std::uint64_t seed = 20260101;
    std::size_t workers = default_worker_count();
};

struct VerifyReport {
    std::string grid_name;
    ComparisonGrid grid;
    std::vector<OracleCheck> checks;
    std::vector<DiscrepancyRecord> discrepancies;

    bool all_checks_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const OracleCheck &c) { return c.passed; });
    }

    std::size_t count(Verdict v) const {
        return static_cast<std::size_t>(std::count_if(discrepancies.begin(), discrepancies.end(),
                                                      [&](const DiscrepancyRecord &r) { return r.verdict == v; }));
    }
};

namespace detail {

class CheckAccumulator {
   public:
    CheckAccumulator(std::string name, double tolerance) : name_(std::move(name)), tolerance_(tolerance) {}

    void add(double error) {
        ++samples_;
        if (std::isnan(error)) {
            saw_nan_ = true;
        } else {
            worst_ = std::max(worst_, error);
        }
    }

    OracleCheck finish() const {
        return {name_, !saw_nan_ && worst_ <= tolerance_, saw_nan_ ? std::nan("") : worst_, tolerance_, samples_};
    }

   private:
    std::string name_;
    double tolerance_;
    double worst_ = 0.0;
    std::size_t samples_ = 0;
    bool saw_nan_ = false;
};

inline TwoQubitState pure_two_qubit(std::span<const cplx> psi) {
    return {ComplexMatrix::projector(psi), Provenance::Exact};
}

struct StateSample {
    TwoQubitState state;
    bool classical = false;  // Q and U must vanish
    bool pure = false;
};

// Grid states (undephased, dephased, pure splits) followed by random states.
inline std::vector<StateSample> collect_states(const ComparisonGrid &grid, const VerifyOptions &options) {
    std::vector<StateSample> out;
    for (const auto &params : grid.model_points()) {
        const bool classical_point = params.p == 0.0 || (params.p == 1.0 && params.m == 0);
        out.push_back({rho12(params), classical_point, false});
        for (double g : grid.gamma) {
            out.push_back({dephase_rho12_closed(params, g), classical_point || g == 1.0, false});
        }
        if (!is_w_limit(params) && normalization(params) > 0.0) {
            const auto split = pure_split_state(params, 1);
            out.push_back({pure_two_qubit(split.coefficients), params.p == 1.0 && params.m == 0, true});
        }
    }
    RandomStates rng(options.seed);
    for (std::size_t i = 0; i < options.random_states; ++i) {
        out.push_back({{rng.density_matrix(4), Provenance::Exact}, false, false});
    }
    for (std::size_t i = 0; i < options.random_states / 4; ++i) {
        const auto psi = rng.pure_state(4);
        out.push_back({pure_two_qubit(psi), false, true});
    }
    return out;
}

}  // namespace detail

inline std::vector<OracleCheck> run_oracle_checks(const ComparisonGrid &grid, const VerifyOptions &options = {}) {
    std::vector<OracleCheck> checks;

    // Model: closed-form reduction against the brute-force partial trace.
    {
        detail::CheckAccumulator trace_check("rho12-vs-partial-trace", 1e-12);
        detail::CheckAccumulator spectrum_check("rho12-spectrum-oracle", 1e-12);
        for (const auto &params : grid.model_points()) {
            if (params.n <= kMaxOracleModes && !is_w_limit(params)) {
                trace_check.add(max_abs_diff(rho12(params).rho, rho12_via_partial_trace(params).rho));
            }
            const auto values = eigh(rho12(params).rho).values;
            const auto mu = rho12_spectrum_oracle(params);
            const double lo = std::min(mu.mu1, mu.mu2);
            const double hi = std::max(mu.mu1, mu.mu2);
            spectrum_check.add(std::max({std::abs(values[0]), std::abs(values[1]), std::abs(values[2] - lo),
                                         std::abs(values[3] - hi), std::abs(mu.mu1 + mu.mu2 - 1.0)}));
        }
        checks.push_back(trace_check.finish());
        checks.push_back(spectrum_check.finish());
    }

    // Channel: completeness, Kraus path, closed form and phase-flip form.
    {
        detail::CheckAccumulator completeness("kraus-completeness", 1e-13);
        detail::CheckAccumulator closed("kraus-vs-closed-channel", 1e-13);
        detail::CheckAccumulator flip("kraus-vs-phase-flip-form", 1e-13);
        for (double g : grid.gamma) {
            completeness.add(kraus_dephasing(g).completeness_error());
        }
        for (const auto &params : grid.model_points()) {
            const auto base = rho12(params);
            for (double g : grid.gamma) {
                const auto kraus_path = apply_local_channel(base, kraus_dephasing(g), Qubit::A);
                closed.add(max_abs_diff(kraus_path.rho, dephase_rho12_closed(params, g).rho));
                flip.add(max_abs_diff(kraus_path.rho, dephase_via_phase_flip(base, g).rho));
            }
        }
        checks.push_back(completeness.finish());
        checks.push_back(closed.finish());
        checks.push_back(flip.finish());
    }

    const auto samples = detail::collect_states(grid, options);

    struct Measures {
        double qfi_sld_gap = 0.0;
        double pure_variance_gap = 0.0;
        double q = 0.0;
        double u = 0.0;
        double q_brute = 0.0;
        double u_brute = 0.0;
    };
    const auto measures = parallel_map(
        samples.size(),
        [&](std::size_t i) {
            const auto &sample = samples[i];
            Measures out;
            for (int axis = 0; axis < 3; ++axis) {
                const auto h = local_pauli(axis);
                out.qfi_sld_gap = std::max(out.qfi_sld_gap, std::abs(qfi(sample.state.rho, h) -
                                                                     qfi_via_sld(sample.state.rho, h)));
            }
            if (sample.pure) {
                // The pure state is the eigenvector of the projector.
                const auto eig = eigh(sample.state.rho);
                const auto psi = eig.vector(3);
                for (int axis = 0; axis < 3; ++axis) {
                    const auto h = local_pauli(axis);
                    out.pure_variance_gap = std::max(
                        out.pure_variance_gap, std::abs(qfi(sample.state.rho, h) - pure_qfi_variance(psi, h)));
                }
            }
            out.q = lqfi(sample.state, options.lqfi_terms).value;
            out.u = lqu(sample.state).value;
            out.q_brute = lqfi_bruteforce(sample.state, options.directions);
            out.u_brute = lqu_bruteforce(sample.state, options.directions);
            return out;
        },
        options.workers);

    detail::CheckAccumulator qfi_sld("qfi-vs-sld", 1e-10);
    detail::CheckAccumulator pure_var("pure-qfi-vs-variance", 1e-10);
    detail::CheckAccumulator q_gap("lqfi-vs-bruteforce", 1e-4);
    detail::CheckAccumulator u_gap("lqu-vs-bruteforce", 1e-4);
    detail::CheckAccumulator q_below("lqfi-not-above-bruteforce", 1e-9);
    detail::CheckAccumulator u_below("lqu-not-above-bruteforce", 1e-9);
    detail::CheckAccumulator luo("luo-sandwich", 1e-9);
    detail::CheckAccumulator pure_eq("pure-state-lqfi-equals-lqu", 1e-9);
    detail::CheckAccumulator classical("zero-on-classical", 1e-8);
    detail::CheckAccumulator range("value-range", 1e-9);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto &s = samples[i];
        const auto &r = measures[i];
        qfi_sld.add(r.qfi_sld_gap);
        if (s.pure) {
            pure_var.add(r.pure_variance_gap);
            pure_eq.add(std::abs(r.q - r.u));
        }
        // The spectral optimum lies below every sampled direction and within
        // the grid resolution of the sampled minimum.
        q_gap.add(std::abs(r.q_brute - r.q));
        u_gap.add(std::abs(r.u_brute - r.u));
        q_below.add(std::max(0.0, r.q - r.q_brute));
        u_below.add(std::max(0.0, r.u - r.u_brute));
        luo.add(std::max({0.0, r.u - r.q, r.q - 2.0 * r.u}));
        if (s.classical) {
            classical.add(std::max(std::abs(r.q), std::abs(r.u)));
        }
        range.add(std::max({0.0, -r.q, r.q - 1.0, -r.u, r.u - 1.0}));
    }
    for (const auto *acc : {&qfi_sld, &pure_var, &q_gap, &q_below, &u_gap, &u_below, &luo, &pure_eq, &classical, &range}) {
        checks.push_back(acc->finish());
    }
    return checks;
}

inline VerifyReport run_verify(const std::string &grid_name, const ComparisonGrid &grid,
                               const VerifyOptions &options = {}) {
    VerifyReport report;
    report.grid_name = grid_name;
    report.grid = grid;
    report.checks = run_oracle_checks(grid, options);
    report.discrepancies = compare_all(grid, options.workers);
    return report;
}

}  // namespace glauber
