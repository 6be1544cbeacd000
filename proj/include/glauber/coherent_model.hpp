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

// Two-qubit encodings of the multipartite even/odd coherent-state family
//   N (|a,...,a> + e^{i m pi} |-a,...,-a>)
// where each mode is mapped onto the logical basis of even/odd cat states.

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "glauber/errors.hpp"
#include "glauber/linalg.hpp"

namespace glauber {

inline constexpr double kDegenerateNormalizationTolerance = 1e-15;
inline constexpr double kWLimitSwitch = 1e-9;
inline constexpr int kMaxOracleModes = 14;

struct ModelParams {
    double p = 0.0;  // overlap <alpha|-alpha>
    int n = 3;       // number of modes
    int m = 0;       // parity: 0 symmetric, 1 antisymmetric

    static ModelParams from_alpha(cplx alpha, int n, int m);

    void validate() const {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw Error(ErrorKind::InvalidParams, "overlap p must lie in [0, 1]");
        }
        if (n < 2) {
            throw Error(ErrorKind::InvalidParams, "mode count n must be at least 2");
        }
        if (m != 0 && m != 1) {
            throw Error(ErrorKind::InvalidParams, "parity m must be 0 or 1");
        }
    }
};

/// p = exp(-2 |alpha|^2)
inline double overlap_from_alpha(cplx alpha) { return std::exp(-2.0 * std::norm(alpha)); }

inline ModelParams ModelParams::from_alpha(cplx alpha, int n, int m) {
    return ModelParams{overlap_from_alpha(alpha), n, m};
}

/// cos(m pi)
inline double parity_sign(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }

/// 1 - p^k without cancellation near p = 1.
inline double one_minus_pow(double p, double k) {
    if (k == 0.0) {
        return 0.0;
    }
    if (p == 0.0) {
        return 1.0;
    }
    return -std::expm1(k * std::log(p));
}

/// 1 + sign * p^k, evaluated stably for either sign.
inline double one_plus_signed_pow(double p, double k, double sign) {
    return sign > 0.0 ? 1.0 + std::pow(p, k) : one_minus_pow(p, k);
}

/// N = (2 + 2 p^n cos(m pi))^{-1/2}
inline double normalization(const ModelParams &params) {
    params.validate();
    const double base = one_plus_signed_pow(params.p, params.n, parity_sign(params.m));
    if (base <= kDegenerateNormalizationTolerance) {
        throw Error(ErrorKind::DegenerateNormalization,
                    "odd-parity state with p^n = 1 has no finite normalization; use the W limit");
    }
    return 1.0 / std::sqrt(2.0 * base);
}

struct LogicalAmplitudes {
    double a = 1.0;
    double b = 0.0;
};

/// a_l = sqrt((1 + p^l)/2), b_l = sqrt((1 - p^l)/2)
inline LogicalAmplitudes logical_amplitudes(double p, int l) {
    if (!(p >= 0.0 && p <= 1.0) || l < 1) {
        throw Error(ErrorKind::InvalidParams, "logical amplitudes need p in [0, 1] and l >= 1");
    }
    return {std::sqrt(0.5 * (1.0 + std::pow(p, l))), std::sqrt(0.5 * one_minus_pow(p, l))};
}

// ---------------------------------------------------------------------------
// Pure k | (n - k) split

struct PureSplitState {
    int k = 1;
    // C00, C01, C10, C11 in the {|0>_k, |1>_k} x {|0>_{n-k}, |1>_{n-k}} basis.
    std::array<cplx, 4> coefficients{};

    std::vector<cplx> vector() const { return {coefficients.begin(), coefficients.end()}; }

    double norm() const {
        double s = 0.0;
        for (const auto &c : coefficients) {
            s += std::norm(c);
        }
        return std::sqrt(s);
    }
};

inline PureSplitState pure_split_state(const ModelParams &params, int k) {
    params.validate();
    if (k < 1 || k > params.n - 1) {
        throw Error(ErrorKind::InvalidParams, "split index k must lie in 1..n-1");
    }
    const double norm = normalization(params);
    const double phase = parity_sign(params.m);
    const auto left = logical_amplitudes(params.p, k);
    const auto right = logical_amplitudes(params.p, params.n - k);

    PureSplitState out;
    out.k = k;
    out.coefficients = {
        norm * (1.0 + phase) * left.a * right.a,
        norm * (1.0 - phase) * left.a * right.b,
        norm * (1.0 - phase) * right.a * left.b,
        norm * (1.0 + phase) * left.b * right.b,
    };
    return out;
}

// ---------------------------------------------------------------------------
// Reduced two-qubit state

enum class Provenance { Exact, Limit, Traced, Dephased };

struct TwoQubitState {
    ComplexMatrix rho = ComplexMatrix::zeros(4);
    Provenance provenance = Provenance::Exact;
};

/// Unnormalised entries of the two-mode reduced matrix (the N^2 prefactor
/// is left out).
struct EtaEntries {
    double eta_a = 0.0;
    double eta_b = 0.0;
    double eta_plus = 0.0;
    double eta_minus = 0.0;

    double trace() const { return eta_a + eta_b + 2.0 * eta_minus; }
};

inline EtaEntries eta_entries(const ModelParams &params) {
    const double sign = parity_sign(params.m);
    const double q_exponent = params.n - 2;
    const double one_plus_qc = one_plus_signed_pow(params.p, q_exponent, sign);
    const double one_minus_qc = one_plus_signed_pow(params.p, q_exponent, -sign);
    const double a2 = 0.5 * (1.0 + params.p);
    const double b2 = 0.5 * (1.0 - params.p);
    return {
        2.0 * a2 * a2 * one_plus_qc,
        2.0 * b2 * b2 * one_plus_qc,
        2.0 * a2 * b2 * one_plus_qc,
        2.0 * a2 * b2 * one_minus_qc,
    };
}

inline bool is_w_limit(const ModelParams &params) {
    return std::abs(one_plus_signed_pow(params.p, params.n, parity_sign(params.m))) < kWLimitSwitch;
}

/// ((n-2)/n)|00><00| + (2/n)|Psi+><Psi+|, the two-mode marginal of the W state.
inline TwoQubitState w_limit_state(int n) {
    TwoQubitState out;
    out.provenance = Provenance::Limit;
    const double inv_n = 1.0 / n;
    out.rho(0, 0) = (n - 2) * inv_n;
    out.rho(1, 1) = inv_n;
    out.rho(1, 2) = inv_n;
    out.rho(2, 1) = inv_n;
    out.rho(2, 2) = inv_n;
    return out;
}

inline TwoQubitState rho12(const ModelParams &params) {
    params.validate();
    if (params.n < 3) {
        throw Error(ErrorKind::InvalidParams, "the two-mode reduction needs n >= 3");
    }
    if (is_w_limit(params)) {
        return w_limit_state(params.n);
    }
    const auto eta = eta_entries(params);
    const double inv_trace = 1.0 / eta.trace();

    TwoQubitState out;
    out.rho(0, 0) = eta.eta_a * inv_trace;
    out.rho(3, 3) = eta.eta_b * inv_trace;
    out.rho(0, 3) = eta.eta_plus * inv_trace;
    out.rho(3, 0) = eta.eta_plus * inv_trace;
    for (std::size_t r = 1; r <= 2; ++r) {
        for (std::size_t c = 1; c <= 2; ++c) {
            out.rho(r, c) = eta.eta_minus * inv_trace;
        }
    }
    return out;
}

/// Full n-mode logical state vector; mode 1 is the most significant qubit.
inline std::vector<cplx> full_logical_state(const ModelParams &params) {
    params.validate();
    if (params.n < 3 || params.n > kMaxOracleModes) {
        throw Error(ErrorKind::UnsupportedSize, "full logical state is limited to 3 <= n <= 14");
    }
    const double norm = normalization(params);
    const double sign = parity_sign(params.m);
    const auto amp = logical_amplitudes(params.p, 1);

    const std::size_t dim = std::size_t{1} << params.n;
    std::vector<double> a_pow(static_cast<std::size_t>(params.n) + 1, 1.0);
    std::vector<double> b_pow(static_cast<std::size_t>(params.n) + 1, 1.0);
    for (std::size_t i = 1; i < a_pow.size(); ++i) {
        a_pow[i] = a_pow[i - 1] * amp.a;
        b_pow[i] = b_pow[i - 1] * amp.b;
    }

    std::vector<cplx> psi(dim);
    for (std::size_t index = 0; index < dim; ++index) {
        const auto ones = static_cast<std::size_t>(std::popcount(index));
        const double branch = 1.0 + sign * ((ones % 2 == 0) ? 1.0 : -1.0);
        psi[index] = norm * branch * a_pow[params.n - ones] * b_pow[ones];
    }
    return psi;
}

/// Reduced state of modes 1, 2 obtained by tracing the full logical state;
/// the ground truth that rho12 is checked against.
inline TwoQubitState rho12_via_partial_trace(const ModelParams &params) {
    const auto psi = full_logical_state(params);
    const std::vector<std::size_t> dims(static_cast<std::size_t>(params.n), 2);
    const std::array<std::size_t, 2> keep{0, 1};
    return {partial_trace_pure(psi, dims, keep), Provenance::Traced};
}

struct Rho12Spectrum {
    double mu1 = 0.0;  // outer {|00>, |11>} block
    double mu2 = 0.0;  // inner {|01>, |10>} block
};

/// Non-zero eigenvalues of rho12 from its X-state blocks. The outer block is
/// rank one because eta_a * eta_b = eta_plus^2.
inline Rho12Spectrum rho12_spectrum_oracle(const ModelParams &params) {
    params.validate();
    if (params.n < 3) {
        throw Error(ErrorKind::InvalidParams, "the two-mode reduction needs n >= 3");
    }
    if (is_w_limit(params)) {
        return {static_cast<double>(params.n - 2) / params.n, 2.0 / params.n};
    }
    const double sign = parity_sign(params.m);
    const double p = params.p;
    const double denom = 2.0 * one_plus_signed_pow(p, params.n, sign);
    const double one_minus_p2 = (1.0 - p) * (1.0 + p);
    return {
        (1.0 + p * p) * one_plus_signed_pow(p, params.n - 2, sign) / denom,
        one_minus_p2 * one_plus_signed_pow(p, params.n - 2, -sign) / denom,
    };
}

}  // namespace glauber
