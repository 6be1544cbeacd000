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

// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "glauber/cli.hpp"
#include "glauber/coherent_model.hpp"
#include "glauber/correlations.hpp"
#include "glauber/dephasing.hpp"
#include "glauber/random_states.hpp"
#include "json.hpp"

namespace {

using namespace glauber;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed = true;
    double max_error = 0.0;
    std::string detail;

    void bound(double error, double tolerance, const std::string &what) {
        if (!std::isfinite(error) || error > tolerance) {
            if (passed) {
                std::ostringstream s;
                s << what << " error " << error << " > " << tolerance;
                detail = s.str();
            }
            passed = false;
        }
        if (std::isfinite(error)) {
            max_error = std::max(max_error, error);
        } else {
            max_error = error;
        }
    }

    void require(bool ok, const std::string &what) {
        if (!ok) {
            if (passed) {
                detail = what;
            }
            passed = false;
        }
    }
};

struct Criterion {
    std::string id;
    std::string name;
    double runtime_limit_s;  // 0 = no runtime bound
    std::function<Outcome()> body;
};

std::vector<ModelParams> model_grid() {
    std::vector<ModelParams> out;
    for (int i = 0; i < 10; ++i) {
        for (int n = 3; n <= 10; ++n) {
            for (int m = 0; m <= 1; ++m) {
                out.push_back({0.05 + 0.1 * i, n, m});
            }
        }
    }
    return out;
}

const std::vector<double> kGammas{0.0, 0.25, 0.5, 0.75, 1.0};

std::vector<TwoQubitState> grid_states() {
    std::vector<TwoQubitState> out;
    for (const auto &params : model_grid()) {
        out.push_back(rho12(params));
        for (double g : kGammas) {
            out.push_back(dephase_rho12_closed(params, g));
        }
    }
    return out;
}

TwoQubitState as_state(const ComplexMatrix &rho) { return {rho, Provenance::Exact}; }

Outcome model_oracle_equivalence() {
    Outcome o;
    for (const auto &params : model_grid()) {
        o.bound(max_abs_diff(rho12(params).rho, rho12_via_partial_trace(params).rho), 1e-12, "rho12 vs partial trace");
    }
    return o;
}

Outcome channel_consistency() {
    Outcome o;
    for (double g : kGammas) {
        o.bound(kraus_dephasing(g).completeness_error(), 1e-13, "Kraus completeness");
    }
    for (const auto &params : model_grid()) {
        const auto base = rho12(params);
        for (double g : kGammas) {
            const auto kraus = apply_local_channel(base, kraus_dephasing(g), Qubit::A);
            o.bound(max_abs_diff(kraus.rho, dephase_rho12_closed(params, g).rho), 1e-13, "Kraus vs closed form");
            o.bound(max_abs_diff(kraus.rho, dephase_via_phase_flip(base, g).rho), 1e-13, "Kraus vs phase-flip form");
        }
    }
    return o;
}

Outcome qfi_cross_oracles() {
    Outcome o;
    RandomStates rng(20260301);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto rho = rng.density_matrix(4);
        const auto h = rng.hermitian(4);
        o.bound(std::abs(qfi(rho, h) - qfi_via_sld(rho, h)), 1e-10, "qfi vs SLD (random)");
        const auto psi = rng.pure_state(4);
        o.bound(std::abs(qfi(ComplexMatrix::projector(psi), h) - pure_qfi_variance(psi, h)), 1e-10,
                "pure qfi vs 4 Var (random)");
    }
    for (const auto &state : grid_states()) {
        for (int axis = 0; axis < 3; ++axis) {
            const auto h = local_pauli(axis);
            o.bound(std::abs(qfi(state.rho, h) - qfi_via_sld(state.rho, h)), 1e-10, "qfi vs SLD (grid)");
        }
    }
    for (const auto &params : model_grid()) {
        for (int k = 1; k < params.n; ++k) {
            const auto psi = pure_split_state(params, k).vector();
            for (int axis = 0; axis < 3; ++axis) {
                const auto h = local_pauli(axis);
                o.bound(std::abs(qfi(ComplexMatrix::projector(psi), h) - pure_qfi_variance(psi, h)), 1e-10,
                        "pure qfi vs 4 Var (split)");
            }
        }
    }
    return o;
}

Outcome limit_point_values() {
    Outcome o;
    auto vanishes = [&](const TwoQubitState &state, const std::string &where) {
        o.bound(std::abs(lqfi(state).value), 1e-8, "Q at " + where);
        o.bound(std::abs(lqu(state).value), 1e-8, "U at " + where);
    };
    for (int n = 3; n <= 25; ++n) {
        for (int m = 0; m <= 1; ++m) {
            vanishes(rho12({0.0, n, m}), "p=0 n=" + std::to_string(n));
        }
        vanishes(rho12({1.0, n, 0}), "p=1 m=0 n=" + std::to_string(n));
    }
    for (const auto &params : model_grid()) {
        vanishes(dephase_rho12_closed(params, 1.0), "gamma=1");
    }
    for (int n = 2; n <= 10; ++n) {
        for (int k = 1; k < n; ++k) {
            const auto psi = pure_split_state({0.0, n, 0}, k).vector();
            const auto probe = as_state(ComplexMatrix::projector(psi));
            o.bound(std::abs(lqfi(probe).value - 1.0), 1e-9, "Q of Bell probe");
            o.bound(std::abs(lqu(probe).value - 1.0), 1e-9, "U of Bell probe");
            o.bound(std::abs(qfi(probe.rho, local_pauli(2)) - 4.0), 1e-10, "sigma_z QFI of Bell probe");
        }
    }
    return o;
}

Outcome luo_sandwich() {
    Outcome o;
    auto states = grid_states();
    RandomStates rng(20260302);
    for (int i = 0; i < 500; ++i) {
        states.push_back(as_state(rng.density_matrix(4)));
    }
    for (const auto &state : states) {
        const double q = lqfi(state).value;
        const double u = lqu(state).value;
        o.bound(u - q, 1e-12, "U <= Q");  // exact comparison trips on 1-ulp noise at Q = U = 0
        o.bound(q - 2.0 * u, 1e-9, "Q <= 2U");
    }
    for (int i = 0; i < 500; ++i) {
        const auto state = as_state(ComplexMatrix::projector(rng.pure_state(4)));
        o.bound(std::abs(lqfi(state).value - lqu(state).value), 1e-9, "pure |Q - U|");
    }
    for (const auto &params : model_grid()) {
        const auto state = as_state(ComplexMatrix::projector(pure_split_state(params, 1).vector()));
        o.bound(std::abs(lqfi(state).value - lqu(state).value), 1e-9, "pure split |Q - U|");
    }
    return o;
}

Outcome spectral_vs_bruteforce() {
    Outcome o;
    const auto all = grid_states();
    const std::size_t stride = all.size() / 100;
    std::size_t used = 0;
    for (std::size_t i = 0; i < all.size() && used < 100; i += stride, ++used) {
        const auto &state = all[i];
        const double q = lqfi(state).value;
        const double u = lqu(state).value;
        const double qb = lqfi_bruteforce(state, 20000);
        const double ub = lqu_bruteforce(state, 20000);
        o.bound(std::abs(q - qb), 1e-4, "|Q - direction search|");
        o.bound(std::abs(u - ub), 1e-4, "|U - direction search|");
        o.bound(q - qb, 1e-9, "Q above direction search");
        o.bound(u - ub, 1e-9, "U above direction search");
    }
    o.require(used == 100, "fewer than 100 states sampled");
    return o;
}

int run_cli(const std::vector<std::string> &args, std::string *out_text = nullptr) {
    std::vector<const char *> argv{"glauber"};
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str();
    if (code != 0) std::cerr << err.str();
    return code;
}

std::string slurp(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path scratch_dir(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / ("glauber_acceptance_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

Outcome discrepancy_suite() {
    Outcome o;
    const auto dir = scratch_dir("verify");
    const auto report_path = dir / "report.json";
    o.require(run_cli({"verify", "--grid", "coarse", "--report", report_path.string()}) == 0, "verify exit code != 0");
    const auto doc = nlohmann::json::parse(slurp(report_path));
    for (const auto &check : doc["oracle_checks"]) {
        o.require(check["passed"].get<bool>(), "oracle check failed: " + check["name"].get<std::string>());
    }
    o.require(!doc["oracle_checks"].empty(), "no oracle checks reported");

    std::map<std::string, std::size_t> per_family;
    bool lqfi_zero = false, omegas_zero = false, eigs_small = false;
    for (const auto &r : doc["discrepancies"]) {
        const auto family = r["quantity"].get<std::string>();
        ++per_family[family];
        if (r["p"].get<double>() != 0.0) continue;
        const auto verdict = r["verdict"].get<std::string>();
        if (family == "Eq33-LQFI" && verdict == "MISMATCH" && std::abs(r["paper"].get<double>() - 0.5) < 1e-12 &&
            std::abs(r["numeric"].get<double>()) < 1e-8) {
            lqfi_zero = true;
        }
        if (family == "Eq38-40-omegas" && verdict == "MISMATCH" &&
            std::abs(r["paper"].get<double>() - 0.6464466094) < 1e-9 && std::abs(r["numeric"].get<double>()) < 1e-8) {
            omegas_zero = true;
        }
        if (family == "Eq26-eigs" && (verdict == "UNDEFINED" || verdict == "MISMATCH")) {
            eigs_small = true;
        }
    }
    o.require(lqfi_zero, "no Eq33-LQFI MISMATCH (0.5 vs 0) at p=0");
    o.require(omegas_zero, "no Eq38-40-omegas MISMATCH (0.6464 vs 0) at p=0");
    o.require(eigs_small, "no UNDEFINED/MISMATCH Eq26-eigs at small p");
    const std::size_t points = 5 * 4 * 2;
    for (const char *f : {"Eq26-eigs", "Eq33-LQFI", "Eq38-40-omegas"}) {
        o.require(per_family[f] == points, std::string("incomplete family ") + f);
    }
    for (const char *f : {"Eq49-50-DC-eigs", "Eq52-LQFI-DC", "Eq54-57-LQU-DC"}) {
        o.require(per_family[f] == points * 5, std::string("incomplete family ") + f);
    }
    std::filesystem::remove_all(dir);
    return o;
}

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    for (std::string field; std::getline(ss, field, ',');) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

Outcome figure_reproduction() {
    Outcome o;
    const auto first = scratch_dir("fig_a");
    const auto second = scratch_dir("fig_b");
    o.require(run_cli({"figure", "all", "--outdir", first.string()}) == 0, "figure all exit code != 0 (first)");
    o.require(run_cli({"figure", "all", "--outdir", second.string()}) == 0, "figure all exit code != 0 (second)");

    std::vector<std::string> names;
    for (int i = 1; i <= 4; ++i) names.push_back("fig" + std::to_string(i) + ".csv");
    for (int i = 5; i <= 8; ++i) {
        for (int n : {3, 4, 5, 25}) names.push_back("fig" + std::to_string(i) + "_n" + std::to_string(n) + ".csv");
    }
    for (const auto &name : names) {
        const auto a = slurp(first / name);
        o.require(!a.empty(), "missing " + name);
        o.require(a == slurp(second / name), name + " differs between runs");
        std::istringstream in(a);
        std::string line;
        std::getline(in, line);
        o.require(line == "p,n,m,gamma,quantity,method,value", "bad header in " + name);
        std::size_t numeric = 0, paper = 0;
        const bool lqu_surface = name.rfind("fig7", 0) == 0 || name.rfind("fig8", 0) == 0;
        while (std::getline(in, line)) {
            const auto f = split_csv(line);
            if (f.size() != 7) {
                o.require(false, "malformed row in " + name);
                break;
            }
            numeric += f[5] == "numeric";
            paper += f[5] == "paper";
            if (lqu_surface && f[5] == "numeric" && !f[3].empty() && std::stod(f[3]) == 1.0) {
                o.bound(f[6] == "undefined" ? INFINITY : std::abs(std::stod(f[6])), 1e-8, "numeric LQU at gamma=1");
            }
        }
        o.require(numeric > 0 && numeric == paper, "unpaired method columns in " + name);
        const std::size_t expected = name.find("_n") == std::string::npos ? 5 * 101 : 101 * 101;
        o.require(numeric == expected, "unexpected row count in " + name);
    }
    std::filesystem::remove_all(first);
    std::filesystem::remove_all(second);
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "model-oracle-equivalence", 60.0, model_oracle_equivalence},
        {"AC2", "channel-consistency", 0.0, channel_consistency},
        {"AC3", "qfi-cross-oracles", 30.0, qfi_cross_oracles},
        {"AC4", "limit-point-values", 0.0, limit_point_values},
        {"AC5", "luo-sandwich", 0.0, luo_sandwich},
        {"AC6", "spectral-vs-bruteforce", 120.0, spectral_vs_bruteforce},
        {"AC7", "discrepancy-suite", 0.0, discrepancy_suite},
        {"AC8", "figure-reproduction", 300.0, figure_reproduction},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception &e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.runtime_limit_s > 0.0 && seconds >= c.runtime_limit_s) {
            o.passed = false;
            o.detail = "runtime over limit";
        }
        std::printf("%s %s %s max_error=%.3g runtime=%.2fs", o.passed ? "PASS" : "FAIL", c.id.c_str(), c.name.c_str(),
                    o.max_error, seconds);
        if (c.runtime_limit_s > 0.0) std::printf(" limit=%.0fs", c.runtime_limit_s);
        if (!o.detail.empty()) std::printf(" (%s)", o.detail.c_str());
        std::printf("\n");
        failures += o.passed ? 0 : 1;
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
