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

#include <cmath>
#include <limits>
#include <vector>

#include "glauber/coherent_model.hpp"
#include "glauber/errors.hpp"
#include "glauber/linalg.hpp"

namespace glauber {

inline constexpr double kKrausCompletenessTolerance = 1e-13;

/// gamma = 1 - exp(-Gamma t)
inline double gamma_of_time(double decay_rate, double time) {
    if (!(decay_rate >= 0.0) || !(time >= 0.0)) {
        throw Error(ErrorKind::InvalidParams, "decay rate and time must be non-negative");
    }
    return -std::expm1(-decay_rate * time);
}

inline void require_probability(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw Error(ErrorKind::InvalidParams, "dephasing probability must lie in [0, 1]");
    }
}

struct KrausSet {
    std::vector<ComplexMatrix> operators;

    /// max |sum K^dagger K - I|
    double completeness_error() const {
        if (operators.empty()) {
            return 1.0;
        }
        const std::size_t dim = operators.front().cols();
        ComplexMatrix sum(dim, dim);
        for (const auto &k : operators) {
            if (k.rows() != dim || k.cols() != dim) {
                return std::numeric_limits<double>::infinity();
            }
            sum += k.adjoint() * k;
        }
        return max_abs_diff(sum, ComplexMatrix::identity(dim));
    }
};

/// {sqrt(1-gamma) I, sqrt(gamma)|0><0|, sqrt(gamma)|1><1|}
inline KrausSet kraus_dephasing(double gamma) {
    require_probability(gamma);
    const double keep = std::sqrt(1.0 - gamma);
    const double flip = std::sqrt(gamma);
    return {{
        ComplexMatrix{{keep, 0.0}, {0.0, keep}},
        ComplexMatrix{{flip, 0.0}, {0.0, 0.0}},
        ComplexMatrix{{0.0, 0.0}, {0.0, flip}},
    }};
}

enum class Qubit { A, B };

inline TwoQubitState apply_local_channel(const TwoQubitState &state, const KrausSet &kraus, Qubit target) {
    for (const auto &k : kraus.operators) {
        if (k.rows() != 2 || k.cols() != 2) {
            throw Error(ErrorKind::InvalidChannel, "local Kraus operators must be 2x2");
        }
    }
    if (!(kraus.completeness_error() < kKrausCompletenessTolerance)) {
        throw Error(ErrorKind::InvalidChannel, "Kraus operators are not trace preserving");
    }
    const auto id = ComplexMatrix::identity(2);
    TwoQubitState out;
    out.provenance = Provenance::Dephased;
    for (const auto &k : kraus.operators) {
        const auto full = target == Qubit::A ? kron(k, id) : kron(id, k);
        out.rho += full * state.rho * full.adjoint();
    }
    return out;
}

/// (1 - gamma/2) rho + (gamma/2) (Z x I) rho (Z x I)
inline TwoQubitState dephase_via_phase_flip(const TwoQubitState &state, double gamma) {
    require_probability(gamma);
    const auto z = kron(pauli_z(), ComplexMatrix::identity(2));
    TwoQubitState out;
    out.provenance = Provenance::Dephased;
    out.rho = state.rho * cplx(1.0 - 0.5 * gamma) + (z * state.rho * z) * cplx(0.5 * gamma);
    return out;
}

/// rho12 with its four qubit-A coherences scaled by (1 - gamma).
inline TwoQubitState dephase_rho12_closed(const ModelParams &params, double gamma) {
    require_probability(gamma);
    auto out = rho12(params);
    out.provenance = Provenance::Dephased;
    const double damp = 1.0 - gamma;
    out.rho(0, 3) *= damp;
    out.rho(3, 0) *= damp;
    out.rho(1, 2) *= damp;
    out.rho(2, 1) *= damp;
    return out;
}

}  // namespace glauber
