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

// Literal transcriptions of reference closed-form expressions for the
// coherent-state family. These are kept exactly as typeset, suspected typos
// included, so that they can be audited against the definitional numerics
// in correlations.hpp. Nothing in here is used to produce physical answers.

#include <array>
#include <cmath>

#include "glauber/coherent_model.hpp"
#include "glauber/correlations.hpp"
#include "glauber/guarded.hpp"

namespace glauber::printed {

/// Shorthands shared by every printed expression.
struct Symbols {
    double p = 0.0;
    int n = 3;
    double parity = 1.0;        // cos(m pi)
    double tail_overlap = 0.0;  // p^(n-2)
    double signed_tail = 0.0;   // p^(n-2) cos(m pi)
    double full_overlap = 0.0;  // p^n
    Guarded norm_sq;            // 1 / (2 + 2 p^n cos(m pi))

    explicit Symbols(const ModelParams &params)
        : p(params.p),
          n(params.n),
          parity(parity_sign(params.m)),
          tail_overlap(std::pow(params.p, params.n - 2)),
          signed_tail(tail_overlap * parity),
          full_overlap(std::pow(params.p, params.n)),
          norm_sq(Guarded(1.0) / Guarded(2.0 + 2.0 * full_overlap * parity)) {}
};

// ---------------------------------------------------------------------------
// Undephased two-mode state

/// Pure-state variance as printed: <H^2> - 4 |<H>|^2.
inline double pure_variance_printed(std::span<const cplx> psi, const ComplexMatrix &h) {
    const auto h_psi = h * psi;
    const double mean = inner(psi, h_psi).real();
    const double second = inner(h_psi, h_psi).real();
    return second - 4.0 * mean * mean;
}

struct Rho12EigsPrinted {
    Guarded lambda3;
    Guarded lambda4;
};

inline constexpr double kMinOverlapForEigs = 1e-6;

/// lambda3 = -N^2 (p^2 - p^(n-2) c)(-1 + p^2) / p^2
/// lambda4 =  N^2 (p^2 + p^(n-2) c)( 1 + p^2) / p^2
inline Rho12EigsPrinted rho12_eigs_printed(const ModelParams &params) {
    if (!(params.p > kMinOverlapForEigs)) {
        return {Guarded::undefined(), Guarded::undefined()};
    }
    const Symbols s(params);
    const double p2 = s.p * s.p;
    return {
        -s.norm_sq * (p2 - s.tail_overlap * s.parity) * (-1.0 + p2) / Guarded(p2),
        s.norm_sq * (p2 + s.tail_overlap * s.parity) * (1.0 + p2) / Guarded(p2),
    };
}

/// The four printed eigenvectors of rho12, in the order psi1..psi4
/// (psi1, psi2 belong to the zero eigenvalues).
inline std::array<std::array<double, 4>, 4> rho12_eigenvectors_printed(double p) {
    const double p2 = p * p;
    const double s1 = std::sqrt((1.0 + p) * (1.0 + p) / (2.0 * (1.0 + p2)));
    const double s4 = -std::sqrt((1.0 - p) * (1.0 - p) / (2.0 * (1.0 + p2)));
    const double h = std::sqrt(2.0) / 2.0;
    // (1 + p)/(1 - p) blows up at p = 1; the printed vector is used as typeset.
    const double ratio4 = (1.0 + p) / (1.0 - p);
    return {{
        {s1, 0.0, 0.0, s1 * (1.0 - p) / (1.0 + p)},
        {0.0, h, -h, 0.0},
        {0.0, h, h, 0.0},
        {s4, 0.0, 0.0, s4 * ratio4},
    }};
}

/// M33 = (1 - p^2)^2 (1 - (q c)^2) / (2 (1 + p^n c)^2); M11 = M22 = 0.
inline Guarded m33_printed(const ModelParams &params) {
    const Symbols s(params);
    const double one_minus_p2 = 1.0 - s.p * s.p;
    const double base = 1.0 + s.full_overlap * s.parity;
    return Guarded(one_minus_p2 * one_minus_p2 * (1.0 - s.signed_tail * s.signed_tail)) / Guarded(2.0 * base * base);
}

/// Q = [2 (1 + p^n c)^2 - (1 - p^2)^2 (1 - (q c)^2)] / [2 (1 + p^n c)^2]
inline Guarded lqfi_closed(const ModelParams &params) {
    const Symbols s(params);
    const double one_minus_p2 = 1.0 - s.p * s.p;
    const double base = 1.0 + s.full_overlap * s.parity;
    const double num = 2.0 * base * base - one_minus_p2 * one_minus_p2 * (1.0 - s.signed_tail * s.signed_tail);
    return Guarded(num) / Guarded(2.0 * base * base);
}

struct LquOmegasPrinted {
    Guarded omega11;
    Guarded omega22;
    Guarded omega33;
    Guarded u;  // 1 - max{omega11, omega33}
};

/// omega11 = N^2 (1-p^2)^2 (1-(q c)^2) / sqrt(2 (1 - q^2 c)^2 (1 - p^4))
/// omega22 = omega11 p^2
/// omega33 = 1/2 - N^2 (1 + p^(n+2) c - 3 (p^2 + p^n c)) / (1 + p^2)
///
/// At p = 1 the omega11 quotient is 0/0 with an identically vanishing
/// numerator; it is taken as 0, its limit along p -> 1.
inline LquOmegasPrinted lqu_omegas_closed(const ModelParams &params) {
    const Symbols s(params);
    const double p2 = s.p * s.p;
    const double one_minus_p2 = 1.0 - p2;
    const double one_minus_q2c = 1.0 - s.tail_overlap * s.tail_overlap * s.parity;

    const Guarded num = s.norm_sq * (one_minus_p2 * one_minus_p2 * (1.0 - s.signed_tail * s.signed_tail));
    const Guarded den = guarded_sqrt(2.0 * one_minus_q2c * one_minus_q2c * (1.0 - p2 * p2));
    Guarded omega11;
    if (num.defined() && num.value() == 0.0 && den.defined()) {
        omega11 = 0.0;
    } else {
        omega11 = num / den;
    }
    const Guarded omega22 = omega11 * p2;
    const double bracket = 1.0 + std::pow(s.p, s.n + 2) * s.parity - 3.0 * (p2 + s.full_overlap * s.parity);
    const Guarded omega33 = Guarded(0.5) - s.norm_sq * bracket / Guarded(1.0 + p2);
    return {omega11, omega22, omega33, Guarded(1.0) - guarded_max(omega11, omega33)};
}

// ---------------------------------------------------------------------------
// Dephased two-mode state

struct DCAuxiliaries {
    Guarded xi_plus;
    Guarded xi_minus;
    Guarded chi_plus;
    Guarded chi_minus;
    Guarded beta;
    Guarded delta;
    Guarded lambda;  // the capital-Lambda auxiliary of the W^DC entries
    Guarded big_delta;
};

inline DCAuxiliaries dc_auxiliaries(const ModelParams &params, double gamma) {
    const Symbols s(params);
    const double p = s.p;
    const double p2 = p * p;
    const double one_minus_p2 = 1.0 - p2;
    const double one_plus_p2 = 1.0 + p2;
    const double g2 = gamma * (2.0 - gamma);

    DCAuxiliaries aux;
    const Guarded root =
        guarded_sqrt(1.0 - g2 * one_minus_p2 * one_minus_p2 / (one_plus_p2 * one_plus_p2));
    aux.xi_plus = Guarded(1.0) + root;
    aux.xi_minus = Guarded(1.0) - root;

    auto chi = [&](Guarded xi) {
        const Guarded num = Guarded(one_minus_p2 * one_minus_p2 * (2.0 + gamma * gamma - 2.0 * gamma)) -
                            xi * one_plus_p2 * (Guarded(4.0 * p) + xi * one_plus_p2);
        const Guarded den =
            Guarded(2.0 * (1.0 - gamma) * one_minus_p2) * (Guarded((1.0 + p) * (1.0 + p)) + one_plus_p2 * xi);
        return s.norm_sq * (num / den);
    };
    aux.chi_plus = chi(aux.xi_plus);
    aux.chi_minus = chi(aux.xi_minus);

    aux.beta = (Guarded(1.0) - s.norm_sq * gamma + s.signed_tail * (Guarded(1.0) + s.norm_sq * gamma)) /
               Guarded((1.0 + s.signed_tail) * (1.0 - p));
    aux.delta = Guarded(1.0) - Guarded(p) / Guarded(s.signed_tail * (2.0 + p - gamma * (1.0 + p)));

    aux.lambda = guarded_sqrt(one_plus_p2 * one_plus_p2 -
                              one_minus_p2 * one_minus_p2 * (2.0 - gamma) * (2.0 - gamma) * gamma * gamma) /
                 Guarded(one_plus_p2);
    aux.big_delta = Guarded(1.0) + Guarded(one_minus_p2) * guarded_sqrt(g2) / Guarded(one_plus_p2);
    return aux;
}

/// lambda_{1,4} = (N^2/2)(1 + q c)(1 + p^2)(1 + sqrt(1 +/- (2g - g^2)(1-p^2)^2/(1+p^2)^2))
/// lambda_{2,3} = (N^2/2)(1 - q c)(1 - p^2)(1 -/+ (g - 1))
inline std::array<Guarded, 4> dc_eigs_printed(const ModelParams &params, double gamma) {
    const Symbols s(params);
    const double p2 = s.p * s.p;
    const double x = (2.0 * gamma - gamma * gamma) * (1.0 - p2) * (1.0 - p2) / ((1.0 + p2) * (1.0 + p2));
    const Guarded outer = s.norm_sq * 0.5 * ((1.0 + s.signed_tail) * (1.0 + p2));
    const Guarded inner_block = s.norm_sq * 0.5 * ((1.0 - s.signed_tail) * (1.0 - p2));
    return {
        outer * (Guarded(1.0) + guarded_sqrt(1.0 + x)),
        inner_block * (1.0 - (gamma - 1.0)),
        inner_block * (1.0 + (gamma - 1.0)),
        outer * (Guarded(1.0) + guarded_sqrt(1.0 - x)),
    };
}

/// The printed dephased eigenvectors psi1^DC..psi4^DC. psi1 and psi2 carry
/// sqrt(-chi^2 / (1 + chi^2)), which is undefined for any real chi != 0.
inline std::array<std::array<Guarded, 4>, 4> dc_eigenvectors_printed(const ModelParams &params, double gamma) {
    const auto aux = dc_auxiliaries(params, gamma);
    auto chi_vector = [](Guarded chi) {
        const Guarded one_plus = Guarded(1.0) + square(chi);
        return std::array<Guarded, 4>{guarded_sqrt(-square(chi) / one_plus), 0.0, 0.0,
                                      guarded_sqrt(Guarded(1.0) / one_plus)};
    };
    auto real_vector = [](Guarded x) {
        const Guarded one_plus = Guarded(1.0) + square(x);
        return std::array<Guarded, 4>{guarded_sqrt(Guarded(1.0) / one_plus), 0.0, 0.0,
                                      -guarded_sqrt(square(x) / one_plus)};
    };
    return {chi_vector(aux.chi_plus), chi_vector(aux.chi_minus), real_vector(aux.delta), real_vector(aux.beta)};
}

/// The printed M33^DC, a sum of four terms.
inline Guarded m33_dc_printed(const ModelParams &params, double gamma) {
    const Symbols s(params);
    const auto aux = dc_auxiliaries(params, gamma);
    const double p2 = s.p * s.p;
    const double one_minus_p2 = 1.0 - p2;
    const double one_minus_p4 = 1.0 - p2 * p2;
    const double one_minus_qc2 = 1.0 - s.signed_tail * s.signed_tail;
    const Guarded beta2_plus = Guarded(1.0) + square(aux.beta);

    auto chi_term = [&](Guarded xi, Guarded chi) {
        const Guarded num = Guarded(2.0 * one_minus_p4) * xi * gamma * s.norm_sq * one_minus_qc2 * square(aux.beta - chi);
        const Guarded den = beta2_plus * (Guarded(1.0) + square(chi)) *
                            (Guarded(gamma * (1.0 - s.signed_tail) * one_minus_p2) + (1.0 + p2) * (1.0 + s.signed_tail) * xi);
        return num / den;
    };
    const Guarded t1 = chi_term(aux.xi_plus, aux.chi_plus);
    const Guarded t2 = Guarded(gamma * one_minus_p2 * (1.0 - s.signed_tail)) * (square(aux.beta) - 1.0) /
                       (Guarded(2.0) * (square(aux.beta) + 1.0));
    const Guarded t3 = chi_term(aux.xi_minus, aux.chi_minus);
    const Guarded t4 = s.norm_sq * ((1.0 + s.signed_tail) * gamma * (2.0 - gamma) * one_minus_p2 * one_minus_p2) *
                       square(aux.chi_plus * aux.chi_minus - 1.0) /
                       (Guarded(2.0 * (1.0 + p2)) * beta2_plus * (Guarded(1.0) + square(aux.chi_minus)));
    return t1 + t2 + t3 + t4;
}

/// Q^DC = 1 - lambda_max(diag(0, 0, M33^DC)).
inline Guarded lqfi_dc_printed(const ModelParams &params, double gamma) {
    return Guarded(1.0) - guarded_max(0.0, m33_dc_printed(params, gamma));
}

struct WDCPrinted {
    Guarded w11;
    Guarded w22;
    Guarded w33;
};

inline WDCPrinted w_dc_printed(const ModelParams &params, double gamma) {
    const Symbols s(params);
    const auto aux = dc_auxiliaries(params, gamma);
    const double p2 = s.p * s.p;
    const double one_minus_p2 = 1.0 - p2;
    const double one_minus_p4 = 1.0 - p2 * p2;
    const double one_minus_qc2 = 1.0 - s.signed_tail * s.signed_tail;
    const double damp2 = (1.0 - gamma) * (1.0 - gamma);
    const Guarded root_g2 = guarded_sqrt(gamma * (2.0 - gamma));

    const Guarded common_den = guarded_sqrt(one_minus_p4 * one_minus_qc2) *
                               (guarded_sqrt(gamma) + guarded_sqrt(2.0 - gamma)) *
                               (guarded_sqrt(Guarded(1.0) + aux.lambda) + guarded_sqrt(Guarded(1.0) - aux.lambda));
    const Guarded first =
        Guarded(2.0 * one_minus_p4 * one_minus_qc2) * s.norm_sq * (Guarded(1.0) + root_g2) * aux.big_delta / common_den;
    const Guarded second =
        s.norm_sq * (damp2 * (one_minus_p2 * one_minus_p2 - 16.0 * s.signed_tail * s.signed_tail)) / common_den;

    const double outer_sq = (one_minus_p2 + 4.0 * s.signed_tail) * (one_minus_p2 + 4.0 * s.signed_tail);
    const double inner_sq = (one_minus_p2 - 4.0 * s.signed_tail) * (one_minus_p2 - 4.0 * s.signed_tail);
    const Guarded w33_a =
        (Guarded(2.0 * (1.0 + s.signed_tail) * (1.0 + s.signed_tail) * p2) * s.norm_sq - Guarded(damp2 * outer_sq)) /
        (Guarded((1.0 + s.signed_tail) * (1.0 + p2)) * aux.big_delta);
    const Guarded w33_b = s.norm_sq * 0.5 * 4.0 * ((1.0 + s.signed_tail) * (1.0 + p2)) * aux.big_delta;
    const Guarded w33_c = s.norm_sq * 0.5 * ((1.0 - s.signed_tail) * one_minus_p2) * (Guarded(1.0) + guarded_sqrt(2.0 * gamma - gamma * gamma));
    const Guarded w33_d =
        s.norm_sq * (damp2 * inner_sq) / (Guarded(2.0 * (1.0 + s.signed_tail) * one_minus_p2) * aux.big_delta);

    return {first + second, first - second, w33_a + w33_b + w33_c - w33_d};
}

/// U^DC = 1 - max{w11^DC, w33^DC}
inline Guarded lqu_dc_printed(const ModelParams &params, double gamma) {
    const auto w = w_dc_printed(params, gamma);
    return Guarded(1.0) - guarded_max(w.w11, w.w33);
}

}  // namespace glauber::printed
