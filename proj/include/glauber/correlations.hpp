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

// Quantum Fisher information, local quantum Fisher information and local
// quantum uncertainty, computed from their definitions.
//
// Normalisation: qfi() returns Tr(rho L^2), so a pure state gives
// 4 Var(H). lqfi() minimises qfi()/4 over unit Bloch directions on qubit A,
// which puts it in [0, 1]. crb() consumes the Tr(rho L^2) convention.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "glauber/coherent_model.hpp"
#include "glauber/errors.hpp"
#include "glauber/linalg.hpp"

namespace glauber {

inline constexpr double kPairCutoff = 1e-12;
inline constexpr double kDensityTraceTolerance = 1e-10;
inline constexpr double kDensityNegativityTolerance = 1e-10;
inline constexpr double kStateNormTolerance = 1e-10;

class BlochDirection {
   public:
    BlochDirection() = default;

    explicit BlochDirection(const std::array<double, 3> &r) : r_(r) {
        const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
        if (!(std::abs(len - 1.0) < 1e-12)) {
            throw Error(ErrorKind::InvalidParams, "Bloch direction must have unit norm");
        }
    }

    static BlochDirection normalized(const std::array<double, 3> &r) {
        const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
        if (!(len > 0.0)) {
            throw Error(ErrorKind::InvalidParams, "cannot normalise a zero vector");
        }
        return BlochDirection({r[0] / len, r[1] / len, r[2] / len});
    }

    const std::array<double, 3> &vector() const noexcept { return r_; }
    double operator[](std::size_t i) const { return r_[i]; }

   private:
    std::array<double, 3> r_{0.0, 0.0, 1.0};
};

enum class Method { Spectral, BruteForce, SldCheck };

struct CorrelationResult {
    double value = 0.0;
    BlochDirection direction;
    Sym3Matrix matrix;
    Method method = Method::Spectral;
};

/// (sigma . r) x I on the two-qubit space.
inline ComplexMatrix local_generator(const std::array<double, 3> &r) {
    return kron(bloch_operator(r), ComplexMatrix::identity(2));
}

inline ComplexMatrix local_pauli(int axis) { return kron(pauli(axis), ComplexMatrix::identity(2)); }

namespace detail {

inline void require_density_matrix(const ComplexMatrix &rho) {
    if (!rho.is_square() || rho.rows() == 0) {
        throw Error(ErrorKind::InvalidState, "density matrix must be square");
    }
    if (hermiticity_error(rho) >= kHermitianTolerance) {
        throw Error(ErrorKind::InvalidState, "density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - cplx(1.0)) > kDensityTraceTolerance) {
        throw Error(ErrorKind::InvalidState, "density matrix does not have unit trace");
    }
}

inline void require_generator(const ComplexMatrix &rho, const ComplexMatrix &h) {
    if (h.rows() != rho.rows() || h.cols() != rho.cols()) {
        throw Error(ErrorKind::InvalidMatrix, "generator and state dimensions differ");
    }
    if (hermiticity_error(h) >= kHermitianTolerance) {
        throw Error(ErrorKind::InvalidMatrix, "generator is not Hermitian");
    }
}

/// Spectrum of a density matrix with the small-negative clamp applied.
inline EigenDecomposition density_spectrum(const ComplexMatrix &rho) {
    auto eig = eigh(rho);
    for (auto &lambda : eig.values) {
        lambda = clamp_eigenvalue(lambda);
        if (lambda < -kDensityNegativityTolerance) {
            throw Error(ErrorKind::InvalidState, "density matrix has a negative eigenvalue");
        }
        lambda = std::max(lambda, 0.0);
    }
    return eig;
}

/// Square root of a density matrix. Eigenvalues at or below kPairCutoff are
/// treated as zero: a residual of size e would otherwise leak sqrt(e) into
/// the root.
inline ComplexMatrix density_root(const ComplexMatrix &rho) {
    auto eig = density_spectrum(rho);
    for (auto &lambda : eig.values) {
        lambda = lambda > kPairCutoff ? std::sqrt(lambda) : 0.0;
    }
    auto root = eig.reconstruct();
    for (std::size_t r = 0; r < root.rows(); ++r) {
        root(r, r) = root(r, r).real();
        for (std::size_t c = r + 1; c < root.cols(); ++c) {
            const cplx avg = 0.5 * (root(r, c) + std::conj(root(c, r)));
            root(r, c) = avg;
            root(c, r) = std::conj(avg);
        }
    }
    return root;
}

inline void require_two_qubit(const TwoQubitState &state) {
    if (state.rho.rows() != 4 || state.rho.cols() != 4) {
        throw Error(ErrorKind::InvalidState, "expected a 4x4 two-qubit density matrix");
    }
    require_density_matrix(state.rho);
}

inline ComplexMatrix to_eigenbasis(const EigenDecomposition &eig, const ComplexMatrix &op) {
    return eig.vectors.adjoint() * op * eig.vectors;
}

// 2 sum_{ij} (li - lj)^2 / (li + lj) |h_ij|^2 with h already in the eigenbasis.
inline double qfi_in_eigenbasis(std::span<const double> lambda, const ComplexMatrix &h) {
    double f = 0.0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        for (std::size_t j = 0; j < lambda.size(); ++j) {
            const double sum = lambda[i] + lambda[j];
            if (sum <= kPairCutoff) {
                continue;
            }
            const double diff = lambda[i] - lambda[j];
            f += diff * diff / sum * std::norm(h(i, j));
        }
    }
    return 2.0 * f;
}

}  // namespace detail

/// Quantum Fisher information of rho under the unitary family exp(-i theta H),
/// in the Tr(rho L^2) convention.
inline double qfi(const ComplexMatrix &rho, const ComplexMatrix &h) {
    detail::require_density_matrix(rho);
    detail::require_generator(rho, h);
    const auto eig = detail::density_spectrum(rho);
    return detail::qfi_in_eigenbasis(eig.values, detail::to_eigenbasis(eig, h));
}

/// Same quantity through the symmetric logarithmic derivative: build
/// d rho = i [rho, H], solve for L in the eigenbasis, return Tr(rho L^2).
inline double qfi_via_sld(const ComplexMatrix &rho, const ComplexMatrix &h) {
    detail::require_density_matrix(rho);
    detail::require_generator(rho, h);
    const auto eig = detail::density_spectrum(rho);
    const cplx i{0.0, 1.0};
    const ComplexMatrix derivative = (rho * h - h * rho) * i;
    const ComplexMatrix d_eigen = detail::to_eigenbasis(eig, derivative);

    const std::size_t dim = rho.rows();
    ComplexMatrix sld_eigen(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const double sum = eig.values[r] + eig.values[c];
            if (sum > kPairCutoff) {
                sld_eigen(r, c) = 2.0 * d_eigen(r, c) / sum;
            }
        }
    }
    const ComplexMatrix sld = eig.vectors * sld_eigen * eig.vectors.adjoint();
    return real_trace_of_product(rho, sld * sld);
}

/// 4 (<H^2> - <H>^2) for a normalised pure state.
inline double pure_qfi_variance(std::span<const cplx> psi, const ComplexMatrix &h) {
    double norm2 = 0.0;
    for (const auto &x : psi) {
        norm2 += std::norm(x);
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > kStateNormTolerance) {
        throw Error(ErrorKind::InvalidState, "pure state is not normalised");
    }
    if (h.rows() != psi.size() || h.cols() != psi.size()) {
        throw Error(ErrorKind::InvalidMatrix, "generator and state dimensions differ");
    }
    const auto h_psi = h * psi;
    const double mean = inner(psi, h_psi).real();
    const double second = inner(h_psi, h_psi).real();
    return 4.0 * (second - mean * mean);
}

enum class MMatrixTerms {
    AllPairs,        // includes i == j, required for F/4 = 1 - r.M.r
    OffDiagonalOnly  // sum over i != j only, as typeset in the closed-form derivation
};

/// M_lk = sum_{ij} 2 li lj / (li + lj) <i|S_l|j><j|S_k|i>, S_l = sigma_l x I.
inline Sym3Matrix lqfi_m_matrix(const EigenDecomposition &eig, MMatrixTerms terms = MMatrixTerms::AllPairs) {
    std::array<ComplexMatrix, 3> s;
    for (int axis = 0; axis < 3; ++axis) {
        s[static_cast<std::size_t>(axis)] = detail::to_eigenbasis(eig, local_pauli(axis));
    }
    const auto &lambda = eig.values;
    Sym3Matrix m;
    for (std::size_t l = 0; l < 3; ++l) {
        for (std::size_t k = l; k < 3; ++k) {
            double acc = 0.0;
            for (std::size_t i = 0; i < lambda.size(); ++i) {
                for (std::size_t j = 0; j < lambda.size(); ++j) {
                    if (terms == MMatrixTerms::OffDiagonalOnly && i == j) {
                        continue;
                    }
                    const double sum = lambda[i] + lambda[j];
                    if (sum <= kPairCutoff) {
                        continue;
                    }
                    acc += 2.0 * lambda[i] * lambda[j] / sum * (s[l](i, j) * s[k](j, i)).real();
                }
            }
            m.set(l, k, acc);
        }
    }
    return m;
}

/// Local quantum Fisher information Q = 1 - lambda_max(M).
inline CorrelationResult lqfi(const TwoQubitState &state, MMatrixTerms terms = MMatrixTerms::AllPairs) {
    detail::require_two_qubit(state);
    const auto eig = detail::density_spectrum(state.rho);
    CorrelationResult out;
    out.matrix = lqfi_m_matrix(eig, terms);
    const auto top = max_eig_sym3(out.matrix);
    out.value = 1.0 - top.value;
    out.direction = BlochDirection::normalized(top.direction);
    out.method = Method::Spectral;
    return out;
}

/// Deterministic near-uniform unit directions (golden-angle spiral) covering
/// the upper hemisphere z >= 0, poles included. The optimised quantities are
/// even in r, so the lower hemisphere adds nothing.
inline std::vector<std::array<double, 3>> fibonacci_directions(std::size_t count) {
    std::vector<std::array<double, 3>> out;
    out.reserve(count);
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < count; ++i) {
        const double z = count == 1 ? 1.0 : 1.0 - static_cast<double>(i) / static_cast<double>(count - 1);
        const double radius = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * static_cast<double>(i);
        out.push_back({radius * std::cos(phi), radius * std::sin(phi), z});
    }
    return out;
}

inline constexpr std::size_t kMinBruteForceDirections = 100;

/// min over grid directions of qfi(rho, (sigma.r) x I) / 4.
inline double lqfi_bruteforce(const TwoQubitState &state, std::size_t directions) {
    if (directions < kMinBruteForceDirections) {
        throw Error(ErrorKind::InvalidParams, "brute-force search needs at least 100 directions");
    }
    detail::require_two_qubit(state);
    const auto eig = detail::density_spectrum(state.rho);
    std::array<ComplexMatrix, 3> s;
    for (int axis = 0; axis < 3; ++axis) {
        s[static_cast<std::size_t>(axis)] = detail::to_eigenbasis(eig, local_pauli(axis));
    }
    double best = std::numeric_limits<double>::infinity();
    ComplexMatrix h(4, 4);
    for (const auto &r : fibonacci_directions(directions)) {
        for (std::size_t idx = 0; idx < 16; ++idx) {
            h.data()[idx] = r[0] * s[0].data()[idx] + r[1] * s[1].data()[idx] + r[2] * s[2].data()[idx];
        }
        best = std::min(best, 0.25 * detail::qfi_in_eigenbasis(eig.values, h));
    }
    return best;
}

/// Wigner-Yanase skew information -1/2 Tr([sqrt(rho), K]^2).
inline double skew_information(const ComplexMatrix &rho, const ComplexMatrix &k) {
    detail::require_density_matrix(rho);
    detail::require_generator(rho, k);
    const auto root = detail::density_root(rho);
    const auto commutator = root * k - k * root;
    return -0.5 * real_trace_of_product(commutator, commutator);
}

/// W_lk = Tr(sqrt(rho) S_l sqrt(rho) S_k).
inline Sym3Matrix lqu_w_matrix(const ComplexMatrix &root) {
    std::array<ComplexMatrix, 3> sandwiched;
    std::array<ComplexMatrix, 3> s;
    for (std::size_t axis = 0; axis < 3; ++axis) {
        s[axis] = local_pauli(static_cast<int>(axis));
        sandwiched[axis] = root * s[axis];
    }
    Sym3Matrix w;
    for (std::size_t l = 0; l < 3; ++l) {
        for (std::size_t k = l; k < 3; ++k) {
            w.set(l, k, real_trace_of_product(sandwiched[l], sandwiched[k]));
        }
    }
    return w;
}

/// Local quantum uncertainty U = 1 - lambda_max(W).
inline CorrelationResult lqu(const TwoQubitState &state) {
    detail::require_two_qubit(state);
    const auto root = detail::density_root(state.rho);
    CorrelationResult out;
    out.matrix = lqu_w_matrix(root);
    const auto top = max_eig_sym3(out.matrix);
    out.value = 1.0 - top.value;
    out.direction = BlochDirection::normalized(top.direction);
    out.method = Method::Spectral;
    return out;
}

/// min over grid directions of skew_information(rho, (sigma.r) x I).
inline double lqu_bruteforce(const TwoQubitState &state, std::size_t directions) {
    if (directions < kMinBruteForceDirections) {
        throw Error(ErrorKind::InvalidParams, "brute-force search needs at least 100 directions");
    }
    detail::require_two_qubit(state);
    const auto root = detail::density_root(state.rho);
    double best = std::numeric_limits<double>::infinity();
    for (const auto &r : fibonacci_directions(directions)) {
        const auto k = local_generator(r);
        const auto commutator = root * k - k * root;
        best = std::min(best, -0.5 * real_trace_of_product(commutator, commutator));
    }
    return best;
}

/// Quantum Cramer-Rao bound 1 / (n F), F in the Tr(rho L^2) convention.
inline double crb(double fisher, long long repetitions) {
    if (!(fisher > 0.0)) {
        throw Error(ErrorKind::UnestimableParameter, "Fisher information must be positive");
    }
    if (repetitions <= 0) {
        throw Error(ErrorKind::InvalidParams, "repetition count must be positive");
    }
    return 1.0 / (static_cast<double>(repetitions) * fisher);
}

}  // namespace glauber
