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

// Parameter sweeps and figure grids with deterministic CSV output.

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "glauber/closed_forms.hpp"
#include "glauber/coherent_model.hpp"
#include "glauber/correlations.hpp"
#include "glauber/dephasing.hpp"
#include "glauber/errors.hpp"
#include "glauber/format.hpp"
#include "glauber/parallel.hpp"

namespace glauber {

enum class Quantity { Qfi, Lqfi, Lqu, LqfiDc, LquDc };

inline std::string_view to_string(Quantity q) {
    switch (q) {
        case Quantity::Qfi: return "qfi";
        case Quantity::Lqfi: return "lqfi";
        case Quantity::Lqu: return "lqu";
        case Quantity::LqfiDc: return "lqfi-dc";
        case Quantity::LquDc: return "lqu-dc";
    }
    return "qfi";
}

inline Quantity parse_quantity(std::string_view s) {
    for (auto q : {Quantity::Qfi, Quantity::Lqfi, Quantity::Lqu, Quantity::LqfiDc, Quantity::LquDc}) {
        if (s == to_string(q)) {
            return q;
        }
    }
    throw Error(ErrorKind::InvalidParams, "unknown quantity '" + std::string(s) + "'");
}

inline bool needs_gamma(Quantity q) { return q == Quantity::LqfiDc || q == Quantity::LquDc; }

enum class MethodSelection { Numeric, Paper, Both };

inline MethodSelection parse_method(std::string_view s) {
    if (s == "numeric") return MethodSelection::Numeric;
    if (s == "paper") return MethodSelection::Paper;
    if (s == "both") return MethodSelection::Both;
    throw Error(ErrorKind::InvalidParams, "unknown method '" + std::string(s) + "'");
}

inline std::vector<std::string_view> methods_of(MethodSelection m) {
    switch (m) {
        case MethodSelection::Numeric: return {"numeric"};
        case MethodSelection::Paper: return {"paper"};
        case MethodSelection::Both: return {"numeric", "paper"};
    }
    return {};
}

inline int parse_generator_axis(std::string_view s) {
    if (s == "x") return 0;
    if (s == "y") return 1;
    if (s == "z") return 2;
    throw Error(ErrorKind::InvalidParams, "generator must be x, y or z");
}

/// start:stop:step axis. When the span is an integer number of steps the
/// points are placed at start + (stop - start) * i / count so that the end
/// point is hit exactly.
struct AxisGrid {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    static AxisGrid parse(std::string_view text) {
        std::vector<double> parts;
        std::string token;
        std::stringstream ss{std::string(text)};
        ss.imbue(std::locale::classic());
        while (std::getline(ss, token, ':')) {
            std::istringstream in(token);
            in.imbue(std::locale::classic());
            double v = 0.0;
            if (!(in >> v) || !(in >> std::ws).eof()) {
                throw Error(ErrorKind::InvalidParams, "malformed grid '" + std::string(text) + "'");
            }
            parts.push_back(v);
        }
        if (parts.size() != 3) {
            throw Error(ErrorKind::InvalidParams, "grid must be start:stop:step, got '" + std::string(text) + "'");
        }
        AxisGrid g{parts[0], parts[1], parts[2]};
        g.validate_shape();
        return g;
    }

    static AxisGrid unit_interval(std::size_t points) {
        return {0.0, 1.0, 1.0 / static_cast<double>(points - 1)};
    }

    void validate_shape() const {
        if (!(step > 0.0) || !(start <= stop) || !std::isfinite(start) || !std::isfinite(stop)) {
            throw Error(ErrorKind::InvalidParams, "grid needs step > 0 and start <= stop");
        }
    }

    void validate_unit() const {
        validate_shape();
        if (!(start >= 0.0 && stop <= 1.0)) {
            throw Error(ErrorKind::InvalidParams, "probability grid must lie inside [0, 1]");
        }
    }

    std::vector<double> values() const {
        const double span_steps = (stop - start) / step;
        const double rounded = std::round(span_steps);
        std::vector<double> out;
        if (std::abs(span_steps - rounded) < 1e-9) {
            const auto intervals = static_cast<std::size_t>(rounded);
            for (std::size_t i = 0; i <= intervals; ++i) {
                out.push_back(intervals == 0 ? start
                                             : start + (stop - start) * static_cast<double>(i) /
                                                           static_cast<double>(intervals));
            }
        } else {
            const auto intervals = static_cast<std::size_t>(std::floor(span_steps));
            for (std::size_t i = 0; i <= intervals; ++i) {
                out.push_back(start + step * static_cast<double>(i));
            }
        }
        return out;
    }
};

struct PointRequest {
    Quantity quantity = Quantity::Lqfi;
    ModelParams params;
    std::optional<double> gamma;
    int generator_axis = 2;
    std::optional<int> split_k;
    MMatrixTerms m_matrix = MMatrixTerms::AllPairs;
};

inline void validate_request(const PointRequest &req) {
    req.params.validate();
    if (needs_gamma(req.quantity) && !req.gamma) {
        throw Error(ErrorKind::InvalidParams, std::string(to_string(req.quantity)) + " needs a dephasing probability");
    }
    if (!needs_gamma(req.quantity) && req.quantity != Quantity::Qfi && req.gamma) {
        throw Error(ErrorKind::InvalidParams,
                    std::string(to_string(req.quantity)) + " is undephased; use the -dc variant with gamma");
    }
    if (req.gamma) {
        require_probability(*req.gamma);
    }
    if (req.split_k && req.quantity != Quantity::Qfi) {
        throw Error(ErrorKind::InvalidParams, "--split-k applies to qfi only");
    }
    if (req.split_k && req.gamma) {
        throw Error(ErrorKind::InvalidParams, "the pure split is not dephased; drop gamma");
    }
}

/// The two-qubit state a request is evaluated on.
inline TwoQubitState request_state(const PointRequest &req) {
    if (req.split_k) {
        const auto split = pure_split_state(req.params, *req.split_k);
        return {ComplexMatrix::projector(split.coefficients), Provenance::Exact};
    }
    if (req.gamma) {
        return dephase_rho12_closed(req.params, *req.gamma);
    }
    return rho12(req.params);
}

/// Definitional value. Degenerate points (odd parity at p = 1 for a pure
/// split) come back as undefined.
inline std::optional<double> evaluate_numeric(const PointRequest &req) {
    try {
        const auto state = request_state(req);
        switch (req.quantity) {
            case Quantity::Qfi: return qfi(state.rho, local_pauli(req.generator_axis));
            case Quantity::Lqfi:
            case Quantity::LqfiDc: return lqfi(state, req.m_matrix).value;
            case Quantity::Lqu:
            case Quantity::LquDc: return lqu(state).value;
        }
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::DegenerateNormalization) {
            throw;
        }
    }
    return std::nullopt;
}

/// Printed closed form. qfi has one only for the pure split (4 x printed
/// variance).
inline std::optional<double> evaluate_paper(const PointRequest &req) {
    switch (req.quantity) {
        case Quantity::Qfi: {
            if (!req.split_k) {
                return std::nullopt;
            }
            try {
                const auto split = pure_split_state(req.params, *req.split_k);
                return 4.0 * printed::pure_variance_printed(split.coefficients, local_pauli(req.generator_axis));
            } catch (const Error &e) {
                if (e.kind() != ErrorKind::DegenerateNormalization) {
                    throw;
                }
                return std::nullopt;
            }
        }
        case Quantity::Lqfi: return printed::lqfi_closed(req.params).optional();
        case Quantity::Lqu: return printed::lqu_omegas_closed(req.params).u.optional();
        case Quantity::LqfiDc: return printed::lqfi_dc_printed(req.params, *req.gamma).optional();
        case Quantity::LquDc: return printed::lqu_dc_printed(req.params, *req.gamma).optional();
    }
    return std::nullopt;
}

inline std::optional<double> evaluate(const PointRequest &req, std::string_view method) {
    auto v = method == "numeric" ? evaluate_numeric(req) : evaluate_paper(req);
    if (v && !std::isfinite(*v)) {
        v.reset();
    }
    return v;
}

struct SweepSpec {
    Quantity quantity = Quantity::Lqfi;
    MethodSelection method = MethodSelection::Numeric;
    AxisGrid p_grid;
    std::optional<std::vector<double>> gamma_values;
    std::vector<int> n_list{3};
    std::vector<int> m_list{0};
    int generator_axis = 2;
    std::optional<int> split_k;
    MMatrixTerms m_matrix = MMatrixTerms::AllPairs;

    void validate() const {
        p_grid.validate_unit();
        if (n_list.empty() || m_list.empty()) {
            throw Error(ErrorKind::InvalidParams, "n and m lists must be non-empty");
        }
        if (needs_gamma(quantity) && (!gamma_values || gamma_values->empty())) {
            throw Error(ErrorKind::InvalidParams, std::string(to_string(quantity)) + " needs a gamma grid");
        }
    }
};

struct SweepRow {
    double p = 0.0;
    int n = 3;
    int m = 0;
    std::optional<double> gamma;
    Quantity quantity = Quantity::Lqfi;
    std::string method;
    std::optional<double> value;
};

/// Rows ordered by (quantity, m, n, p, gamma, method), numeric before paper.
inline std::vector<SweepRow> run_sweep(const SweepSpec &spec, std::size_t workers = default_worker_count()) {
    spec.validate();
    std::vector<PointRequest> requests;
    const auto p_values = spec.p_grid.values();
    for (int m : spec.m_list) {
        for (int n : spec.n_list) {
            for (double p : p_values) {
                const ModelParams params{p, n, m};
                auto push = [&](std::optional<double> gamma) {
                    PointRequest req{spec.quantity, params, gamma, spec.generator_axis, spec.split_k, spec.m_matrix};
                    validate_request(req);
                    requests.push_back(req);
                };
                if (spec.gamma_values) {
                    for (double g : *spec.gamma_values) {
                        push(g);
                    }
                } else {
                    push(std::nullopt);
                }
            }
        }
    }
    const auto methods = methods_of(spec.method);
    auto per_request = parallel_map(
        requests.size(),
        [&](std::size_t i) {
            std::vector<SweepRow> rows;
            const auto &req = requests[i];
            for (auto method : methods) {
                rows.push_back({req.params.p, req.params.n, req.params.m, req.gamma, req.quantity,
                                std::string(method), evaluate(req, method)});
            }
            return rows;
        },
        workers);
    std::vector<SweepRow> out;
    out.reserve(requests.size() * methods.size());
    for (auto &rows : per_request) {
        std::move(rows.begin(), rows.end(), std::back_inserter(out));
    }
    return out;
}

inline constexpr std::string_view kCsvHeader = "p,n,m,gamma,quantity,method,value";

inline void write_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << kCsvHeader << '\n';
    for (const auto &r : rows) {
        out << format_sig12(r.p) << ',' << r.n << ',' << r.m << ','
            << (r.gamma ? format_sig12(*r.gamma) : std::string()) << ',' << to_string(r.quantity) << ','
            << r.method << ',' << format_sig12_or_undefined(r.value) << '\n';
    }
}

// ---------------------------------------------------------------------------
// Figure grids

struct FigureSpec {
    std::string id;
    Quantity quantity = Quantity::Lqfi;
    int m = 0;
    std::vector<int> n_values;
};

inline std::vector<FigureSpec> figure_catalog() {
    const std::vector<int> line_n{3, 4, 5, 10, 25};
    const std::vector<int> surface_n{3, 4, 5, 25};
    return {
        {"fig1", Quantity::Lqfi, 0, line_n},   {"fig2", Quantity::Lqfi, 1, line_n},
        {"fig3", Quantity::Lqu, 0, line_n},    {"fig4", Quantity::Lqu, 1, line_n},
        {"fig5", Quantity::LqfiDc, 0, surface_n}, {"fig6", Quantity::LqfiDc, 1, surface_n},
        {"fig7", Quantity::LquDc, 0, surface_n},  {"fig8", Quantity::LquDc, 1, surface_n},
    };
}

inline FigureSpec find_figure(std::string_view id) {
    for (const auto &f : figure_catalog()) {
        if (f.id == id) {
            return f;
        }
    }
    throw Error(ErrorKind::InvalidParams, "unknown figure '" + std::string(id) + "'");
}

struct FigureFile {
    std::string name;  // file name without directory
    SweepSpec spec;
};

/// Undephased figures produce one file over all n; dephased (p, gamma)
/// surfaces produce one file per n.
inline std::vector<FigureFile> figure_files(const FigureSpec &fig, std::size_t resolution) {
    if (resolution < 2) {
        throw Error(ErrorKind::InvalidParams, "figure resolution must be at least 2");
    }
    SweepSpec base;
    base.quantity = fig.quantity;
    base.method = MethodSelection::Both;
    base.p_grid = AxisGrid::unit_interval(resolution);
    base.m_list = {fig.m};
    if (!needs_gamma(fig.quantity)) {
        base.n_list = fig.n_values;
        return {{fig.id + ".csv", base}};
    }
    base.gamma_values = AxisGrid::unit_interval(resolution).values();
    std::vector<FigureFile> out;
    for (int n : fig.n_values) {
        auto spec = base;
        spec.n_list = {n};
        out.push_back({fig.id + "_n" + std::to_string(n) + ".csv", spec});
    }
    return out;
}

/// Writes the figure's CSV files into outdir and returns their paths.
inline std::vector<std::filesystem::path> write_figure(const FigureSpec &fig, const std::filesystem::path &outdir,
                                                       std::size_t resolution,
                                                       std::size_t workers = default_worker_count()) {
    std::filesystem::create_directories(outdir);
    std::vector<std::filesystem::path> written;
    for (const auto &file : figure_files(fig, resolution)) {
        const auto rows = run_sweep(file.spec, workers);
        const auto path = outdir / file.name;
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot open " + path.string() + " for writing");
        }
        write_csv(out, rows);
        if (!out) {
            throw std::runtime_error("failed writing " + path.string());
        }
        written.push_back(path);
    }
    return written;
}

}  // namespace glauber
