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

// Seeded generators for random test inputs (Ginibre ensembles).

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "glauber/coherent_model.hpp"
#include "glauber/linalg.hpp"

namespace glauber {

class RandomStates {
   public:
    explicit RandomStates(std::uint64_t seed) : rng_(seed) {}

    cplx gaussian() { return {normal_(rng_), normal_(rng_)}; }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    ComplexMatrix ginibre(std::size_t dim) {
        ComplexMatrix g(dim, dim);
        for (auto &x : g.data()) {
            x = gaussian();
        }
        return g;
    }

    ComplexMatrix hermitian(std::size_t dim) {
        const auto g = ginibre(dim);
        return (g + g.adjoint()) * cplx(0.5);
    }

    /// G G^dagger / Tr, full rank with probability one.
    ComplexMatrix density_matrix(std::size_t dim) {
        const auto g = ginibre(dim);
        auto rho = g * g.adjoint();
        rho *= cplx(1.0 / rho.trace().real());
        return rho;
    }

    /// Mixture of `rank` random pure states; rank-deficient when rank < dim.
    ComplexMatrix density_matrix_of_rank(std::size_t dim, std::size_t rank) {
        ComplexMatrix rho(dim, dim);
        for (std::size_t r = 0; r < rank; ++r) {
            const auto psi = pure_state(dim);
            rho += ComplexMatrix::projector(psi) * cplx(uniform(0.1, 1.0));
        }
        rho *= cplx(1.0 / rho.trace().real());
        return rho;
    }

    std::vector<cplx> pure_state(std::size_t dim) {
        std::vector<cplx> psi(dim);
        double norm2 = 0.0;
        for (auto &x : psi) {
            x = gaussian();
            norm2 += std::norm(x);
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto &x : psi) {
            x *= inv;
        }
        return psi;
    }

    /// Haar-distributed unitary via Gram-Schmidt on a Ginibre matrix.
    ComplexMatrix unitary(std::size_t dim) {
        auto u = ginibre(dim);
        for (std::size_t c = 0; c < dim; ++c) {
            for (std::size_t prev = 0; prev < c; ++prev) {
                cplx proj = 0.0;
                for (std::size_t r = 0; r < dim; ++r) {
                    proj += std::conj(u(r, prev)) * u(r, c);
                }
                for (std::size_t r = 0; r < dim; ++r) {
                    u(r, c) -= proj * u(r, prev);
                }
            }
            double norm2 = 0.0;
            for (std::size_t r = 0; r < dim; ++r) {
                norm2 += std::norm(u(r, c));
            }
            const double inv = 1.0 / std::sqrt(norm2);
            for (std::size_t r = 0; r < dim; ++r) {
                u(r, c) *= inv;
            }
        }
        return u;
    }

    std::array<double, 3> unit_vector() {
        std::array<double, 3> r{normal_(rng_), normal_(rng_), normal_(rng_)};
        const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
        for (auto &x : r) {
            x /= len;
        }
        return r;
    }

   private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace glauber
