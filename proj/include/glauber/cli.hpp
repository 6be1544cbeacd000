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

// Command-line front end: value, sweep, figure and verify subcommands.

#include <CLI11.hpp>

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "glauber/correlations.hpp"
#include "glauber/discrepancy.hpp"
#include "glauber/errors.hpp"
#include "glauber/format.hpp"
#include "glauber/report.hpp"
#include "glauber/sweep.hpp"
#include "glauber/verify.hpp"

namespace glauber::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitOracleFailure = 2;

/// Raised when a --strict cross-check fails.
class OracleFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline MMatrixTerms parse_m_matrix(const std::string &s) {
    if (s == "full") return MMatrixTerms::AllPairs;
    if (s == "printed") return MMatrixTerms::OffDiagonalOnly;
    throw Error(ErrorKind::InvalidParams, "--m-matrix must be full or printed");
}

inline std::vector<double> gamma_axis(const std::optional<std::string> &gamma_grid,
                                      const std::optional<double> &decay_rate,
                                      const std::optional<std::string> &time_grid) {
    if (gamma_grid) {
        auto g = AxisGrid::parse(*gamma_grid);
        g.validate_unit();
        return g.values();
    }
    auto t = AxisGrid::parse(*time_grid);
    if (t.start < 0.0) {
        throw Error(ErrorKind::InvalidParams, "time grid must be non-negative");
    }
    std::vector<double> out;
    for (double time : t.values()) {
        out.push_back(gamma_of_time(*decay_rate, time));
    }
    return out;
}

// Point-level cross-checks behind `value --strict`.
inline void strict_checks(const PointRequest &req, std::ostream &err) {
    std::vector<std::string> failures;
    auto expect = [&](bool ok, const std::string &what) {
        if (!ok) {
            failures.push_back(what);
        }
    };
    TwoQubitState state;
    try {
        state = request_state(req);
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::DegenerateNormalization) {
            return;
        }
        throw;
    }
    if (!req.split_k && !req.gamma && req.params.n <= kMaxOracleModes) {
        const double gap = max_abs_diff(state.rho, rho12_via_partial_trace(req.params).rho);
        expect(gap < 1e-12, "rho12 differs from the partial trace by " + format_sig12(gap));
    }
    if (req.gamma) {
        const auto kraus = apply_local_channel(rho12(req.params), kraus_dephasing(*req.gamma), Qubit::A);
        const double gap = max_abs_diff(state.rho, kraus.rho);
        expect(gap < 1e-13, "closed dephasing differs from the Kraus path by " + format_sig12(gap));
    }
    const auto h = local_pauli(req.generator_axis);
    const double f = qfi(state.rho, h);
    const double f_sld = qfi_via_sld(state.rho, h);
    expect(std::abs(f - f_sld) < 1e-10, "qfi differs from the SLD route by " + format_sig12(std::abs(f - f_sld)));

    const double q = lqfi(state, req.m_matrix).value;
    const double u = lqu(state).value;
    const double q_brute = lqfi_bruteforce(state, 20000);
    const double u_brute = lqu_bruteforce(state, 20000);
    expect(std::abs(q - q_brute) <= 1e-4 && q <= q_brute + 1e-9,
           "lqfi " + format_sig12(q) + " disagrees with the direction search " + format_sig12(q_brute));
    expect(std::abs(u - u_brute) <= 1e-4 && u <= u_brute + 1e-9,
           "lqu " + format_sig12(u) + " disagrees with the direction search " + format_sig12(u_brute));
    expect(u <= q + 1e-9 && q <= 2.0 * u + 1e-9, "U <= Q <= 2U violated");
    expect(q >= -1e-9 && q <= 1.0 + 1e-9 && u >= -1e-9 && u <= 1.0 + 1e-9, "value outside [0, 1]");
    if (!failures.empty()) {
        for (const auto &f : failures) {
            err << "strict: " << f << '\n';
        }
        throw OracleFailure("strict cross-check failed");
    }
}

inline std::string value_text(const std::optional<double> &v) {
    return v ? format_fixed12(*v) : std::string("undefined");
}

}  // namespace detail

/// Runs the CLI and returns the process exit code.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Correlation measures of coherent-state probes under dephasing", "glauber"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    // value ------------------------------------------------------------------
    auto *value = app.add_subcommand("value", "Evaluate one quantity at one parameter point");
    std::string v_quantity, v_method = "numeric", v_generator = "z", v_m_matrix = "full";
    std::optional<double> v_p, v_alpha, v_gamma, v_rate, v_time;
    int v_n = 3, v_m = 0;
    std::optional<int> v_split;
    bool v_strict = false;
    value->add_option("--quantity", v_quantity, "qfi | lqfi | lqu | lqfi-dc | lqu-dc")->required();
    auto *p_opt = value->add_option("--p", v_p, "Overlap p in [0, 1]");
    auto *alpha_opt = value->add_option("--alpha", v_alpha, "Real coherent amplitude (p = exp(-2 alpha^2))");
    p_opt->excludes(alpha_opt);
    value->add_option("--n", v_n, "Number of modes (>= 3)");
    value->add_option("--m", v_m, "Parity index (0 or 1)");
    value->add_option("--method", v_method, "numeric | paper | both");
    auto *gamma_opt = value->add_option("--gamma", v_gamma, "Dephasing probability");
    auto *rate_opt = value->add_option("--decay-rate", v_rate, "Dephasing rate");
    auto *time_opt = value->add_option("--time", v_time, "Evolution time");
    gamma_opt->excludes(rate_opt)->excludes(time_opt);
    rate_opt->needs(time_opt);
    time_opt->needs(rate_opt);
    value->add_option("--split-k", v_split, "Use the pure k | n-k split (qfi only)");
    value->add_option("--generator", v_generator, "Local generator axis x | y | z");
    value->add_option("--m-matrix", v_m_matrix, "full | printed (diagnostic)");
    value->add_flag("--strict", v_strict, "Run point cross-checks; exit 2 on failure");

    // sweep ------------------------------------------------------------------
    auto *sweep = app.add_subcommand("sweep", "Evaluate a quantity over a parameter grid");
    std::string s_quantity, s_method = "numeric", s_output = "-", s_format = "csv", s_generator = "z";
    std::string s_p_grid = "0:1:0.01", s_m_matrix = "full";
    std::optional<std::string> s_gamma_grid, s_time_grid;
    std::optional<double> s_rate;
    std::vector<int> s_n{3}, s_m{0};
    std::optional<int> s_split;
    std::size_t s_jobs = default_worker_count();
    sweep->add_option("--quantity", s_quantity, "qfi | lqfi | lqu | lqfi-dc | lqu-dc")->required();
    sweep->add_option("--method", s_method, "numeric | paper | both");
    sweep->add_option("--p-grid", s_p_grid, "start:stop:step")->capture_default_str();
    auto *sg = sweep->add_option("--gamma-grid", s_gamma_grid, "start:stop:step");
    auto *sr = sweep->add_option("--decay-rate", s_rate, "Dephasing rate");
    auto *st = sweep->add_option("--time-grid", s_time_grid, "start:stop:step");
    sg->excludes(sr)->excludes(st);
    sr->needs(st);
    st->needs(sr);
    sweep->add_option("--n-list", s_n, "Mode counts")->delimiter(',');
    sweep->add_option("--m-list", s_m, "Parity indices")->delimiter(',');
    sweep->add_option("--output", s_output, "Output path or - for stdout");
    sweep->add_option("--format", s_format, "csv | json");
    sweep->add_option("--jobs", s_jobs, "Worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--generator", s_generator, "Local generator axis x | y | z");
    sweep->add_option("--split-k", s_split, "Use the pure k | n-k split (qfi only)");
    sweep->add_option("--m-matrix", s_m_matrix, "full | printed (diagnostic)");

    // figure -----------------------------------------------------------------
    auto *figure = app.add_subcommand("figure", "Write the CSV grid behind a figure");
    std::string f_id, f_outdir = ".";
    std::size_t f_resolution = 101, f_jobs = default_worker_count();
    figure->add_option("id", f_id, "fig1 .. fig8 or all")->required();
    figure->add_option("--outdir", f_outdir, "Output directory");
    figure->add_option("--resolution", f_resolution, "Points per axis")->check(CLI::Range(2, 100000));
    figure->add_option("--jobs", f_jobs, "Worker threads")->check(CLI::PositiveNumber);

    // verify -----------------------------------------------------------------
    auto *verify = app.add_subcommand("verify", "Run oracle cross-checks and the closed-form comparison");
    std::string r_grid = "coarse", r_m_matrix = "full";
    std::optional<std::string> r_report;
    bool r_strict = false;
    VerifyOptions r_options;
    verify->add_option("--grid", r_grid, "coarse | fine");
    verify->add_option("--report", r_report, "JSON report path (- for stdout)");
    verify->add_flag("--strict", r_strict, "Exit 2 on any oracle failure (always on)");
    verify->add_option("--m-matrix", r_m_matrix, "full | printed (diagnostic)");
    verify->add_option("--jobs", r_options.workers, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--directions", r_options.directions, "Direction-search resolution")
        ->check(CLI::Range(static_cast<std::size_t>(kMinBruteForceDirections), static_cast<std::size_t>(10000000)));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*value) {
            PointRequest req;
            req.quantity = parse_quantity(v_quantity);
            const auto method = parse_method(v_method);
            if (!v_p && !v_alpha) {
                throw Error(ErrorKind::InvalidParams, "one of --p or --alpha is required");
            }
            req.params = v_alpha ? ModelParams::from_alpha(*v_alpha, v_n, v_m) : ModelParams{*v_p, v_n, v_m};
            if (v_gamma) {
                req.gamma = *v_gamma;
            } else if (v_rate) {
                req.gamma = gamma_of_time(*v_rate, *v_time);
            }
            req.generator_axis = parse_generator_axis(v_generator);
            req.split_k = v_split;
            req.m_matrix = detail::parse_m_matrix(v_m_matrix);
            validate_request(req);
            if (req.split_k) {
                pure_split_state(req.params, *req.split_k);  // validates k
            }
            if (v_strict) {
                detail::strict_checks(req, err);
            }
            if (method == MethodSelection::Both) {
                out << "numeric " << detail::value_text(evaluate(req, "numeric")) << '\n';
                out << "paper " << detail::value_text(evaluate(req, "paper")) << '\n';
            } else {
                out << detail::value_text(evaluate(req, methods_of(method).front())) << '\n';
            }
            return kExitOk;
        }

        if (*sweep) {
            SweepSpec spec;
            spec.quantity = parse_quantity(s_quantity);
            spec.method = parse_method(s_method);
            spec.p_grid = AxisGrid::parse(s_p_grid);
            const bool has_gamma = s_gamma_grid || s_time_grid;
            if (has_gamma && !needs_gamma(spec.quantity)) {
                throw Error(ErrorKind::InvalidParams, "a gamma grid needs lqfi-dc or lqu-dc");
            }
            if (has_gamma) {
                spec.gamma_values = detail::gamma_axis(s_gamma_grid, s_rate, s_time_grid);
            }
            spec.n_list = s_n;
            spec.m_list = s_m;
            spec.generator_axis = parse_generator_axis(s_generator);
            spec.split_k = s_split;
            spec.m_matrix = detail::parse_m_matrix(s_m_matrix);
            if (s_format != "csv" && s_format != "json") {
                throw Error(ErrorKind::InvalidParams, "--format must be csv or json");
            }
            const auto rows = run_sweep(spec, s_jobs);
            auto emit = [&](std::ostream &os) {
                if (s_format == "csv") {
                    write_csv(os, rows);
                } else {
                    os << sweep_json(rows).dump(2) << '\n';
                }
            };
            if (s_output == "-") {
                emit(out);
            } else {
                std::ofstream file(s_output, std::ios::binary);
                if (!file) {
                    err << "error: cannot open " << s_output << " for writing\n";
                    return kExitUsage;
                }
                emit(file);
                file.close();
                if (!file) {
                    err << "error: failed writing " << s_output << '\n';
                    return kExitUsage;
                }
            }
            return kExitOk;
        }

        if (*figure) {
            std::vector<FigureSpec> figures;
            if (f_id == "all") {
                figures = figure_catalog();
            } else {
                figures.push_back(find_figure(f_id));
            }
            for (const auto &fig : figures) {
                for (const auto &path : write_figure(fig, f_outdir, f_resolution, f_jobs)) {
                    out << path.string() << '\n';
                }
            }
            return kExitOk;
        }

        if (*verify) {
            ComparisonGrid grid;
            if (r_grid == "coarse") {
                grid = ComparisonGrid::coarse();
            } else if (r_grid == "fine") {
                grid = ComparisonGrid::fine();
            } else {
                throw Error(ErrorKind::InvalidParams, "--grid must be coarse or fine");
            }
            r_options.lqfi_terms = detail::parse_m_matrix(r_m_matrix);
            const auto report = run_verify(r_grid, grid, r_options);
            const auto doc = to_json(report).dump(2);
            if (r_report && *r_report != "-") {
                std::ofstream file(*r_report, std::ios::binary);
                if (!file) {
                    err << "error: cannot open " << *r_report << " for writing\n";
                    return kExitUsage;
                }
                file << doc << '\n';
            } else if (r_report) {
                out << doc << '\n';
            }
            std::size_t passed = 0;
            for (const auto &c : report.checks) {
                if (c.passed) {
                    ++passed;
                } else {
                    err << "oracle check failed: " << c.name << " max_error " << format_sig12(c.max_error)
                        << " tolerance " << format_sig12(c.tolerance) << '\n';
                }
            }
            out << "verify " << r_grid << ": checks " << passed << "/" << report.checks.size() << " passed; records "
                << report.discrepancies.size() << " (match " << report.count(Verdict::Match) << ", mismatch "
                << report.count(Verdict::Mismatch) << ", undefined " << report.count(Verdict::Undefined) << ")\n";
            return report.all_checks_passed() ? kExitOk : kExitOracleFailure;
        }
    } catch (const OracleFailure &e) {
        err << "error: " << e.what() << '\n';
        return kExitOracleFailure;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace glauber::cli
