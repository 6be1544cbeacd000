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

// Dense complex linear algebra for the small Hermitian matrices that show up
// in two-qubit state analysis: cyclic Jacobi eigensolver, PSD square root,
// tensor products and partial traces.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "glauber/errors.hpp"

namespace glauber {

using cplx = std::complex<double>;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kEigenClampTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffDiagonalTolerance = 1e-14;

/// Row-major dense complex matrix.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto &row : rows) {
            if (row.size() != cols_) {
                throw Error(ErrorKind::InvalidMatrix, "ragged initializer list");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static ComplexMatrix zeros(std::size_t n) { return ComplexMatrix(n, n); }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix out(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            out(i, i) = 1.0;
        }
        return out;
    }

    static ComplexMatrix diagonal(std::span<const double> values) {
        ComplexMatrix out(values.size(), values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            out(i, i) = values[i];
        }
        return out;
    }

    static ComplexMatrix outer(std::span<const cplx> ket, std::span<const cplx> bra) {
        ComplexMatrix out(ket.size(), bra.size());
        for (std::size_t i = 0; i < ket.size(); ++i) {
            for (std::size_t j = 0; j < bra.size(); ++j) {
                out(i, j) = ket[i] * std::conj(bra[j]);
            }
        }
        return out;
    }

    static ComplexMatrix projector(std::span<const cplx> psi) { return outer(psi, psi); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    cplx &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const cplx> data() const noexcept { return data_; }
    std::span<cplx> data() noexcept { return data_; }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                out(c, r) = std::conj((*this)(r, c));
            }
        }
        return out;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    ComplexMatrix &operator+=(const ComplexMatrix &other) {
        require_same_shape(other);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] += other.data_[i];
        }
        return *this;
    }

    ComplexMatrix &operator-=(const ComplexMatrix &other) {
        require_same_shape(other);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] -= other.data_[i];
        }
        return *this;
    }

    ComplexMatrix &operator*=(cplx scale) {
        for (auto &x : data_) {
            x *= scale;
        }
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
        if (a.cols_ != b.rows_) {
            throw Error(ErrorKind::InvalidMatrix, "inner dimensions differ in matrix product");
        }
        ComplexMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

    friend std::vector<cplx> operator*(const ComplexMatrix &a, std::span<const cplx> v) {
        if (a.cols_ != v.size()) {
            throw Error(ErrorKind::InvalidMatrix, "dimension mismatch in matrix-vector product");
        }
        std::vector<cplx> out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) {
                out[i] += a(i, j) * v[j];
            }
        }
        return out;
    }

   private:
    void require_same_shape(const ComplexMatrix &other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw Error(ErrorKind::InvalidMatrix, "shape mismatch");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

inline double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::InvalidMatrix, "shape mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

inline double hermiticity_error(const ComplexMatrix &a) {
    if (!a.is_square()) {
        return std::numeric_limits<double>::infinity();
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = r; c < a.cols(); ++c) {
            worst = std::max(worst, std::abs(a(r, c) - std::conj(a(c, r))));
        }
    }
    return worst;
}

inline double frobenius_norm(const ComplexMatrix &a) {
    double s = 0.0;
    for (const auto &x : a.data()) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

inline cplx inner(std::span<const cplx> bra, std::span<const cplx> ket) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < bra.size(); ++i) {
        s += std::conj(bra[i]) * ket[i];
    }
    return s;
}

/// <psi|A|psi>
inline cplx expectation(const ComplexMatrix &a, std::span<const cplx> psi) {
    const auto a_psi = a * psi;
    return inner(psi, a_psi);
}

/// Re Tr(A B) without forming the product.
inline double real_trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            s += (a(i, k) * b(k, i)).real();
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Pauli algebra

inline ComplexMatrix pauli(int axis) {
    const cplx i{0.0, 1.0};
    switch (axis) {
        case 0: return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
        case 1: return ComplexMatrix{{0.0, -i}, {i, 0.0}};
        case 2: return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}};
        default: throw Error(ErrorKind::InvalidParams, "Pauli axis must be 0, 1 or 2");
    }
}

inline ComplexMatrix pauli_x() { return pauli(0); }
inline ComplexMatrix pauli_y() { return pauli(1); }
inline ComplexMatrix pauli_z() { return pauli(2); }

/// sigma . r for a real 3-vector r.
inline ComplexMatrix bloch_operator(const std::array<double, 3> &r) {
    ComplexMatrix out(2, 2);
    for (int axis = 0; axis < 3; ++axis) {
        out += pauli(axis) * cplx(r[static_cast<std::size_t>(axis)]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tensor products and partial traces

inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const cplx x = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
                }
            }
        }
    }
    return out;
}

namespace detail {

// Groups full-space basis indices by their traced-out digits so that a
// partial trace becomes a sum of small blocks. Subsystem 0 is the most
// significant digit, matching kron(A, B) ordering.
struct TraceLayout {
    std::size_t kept_dim = 1;
    std::size_t traced_dim = 1;
    // full_index[t * kept_dim + k]
    std::vector<std::size_t> full_index;
};

inline TraceLayout make_trace_layout(std::size_t total_dim, std::span<const std::size_t> dims,
                                     std::span<const std::size_t> keep) {
    std::size_t product = 1;
    for (auto d : dims) {
        if (d == 0) {
            throw Error(ErrorKind::InvalidMatrix, "subsystem dimension must be positive");
        }
        product *= d;
    }
    if (product != total_dim) {
        throw Error(ErrorKind::InvalidMatrix, "product of subsystem dimensions does not match matrix size");
    }
    if (keep.empty()) {
        throw Error(ErrorKind::InvalidMatrix, "kept subsystem set must be non-empty");
    }
    std::vector<bool> kept(dims.size(), false);
    for (auto k : keep) {
        if (k >= dims.size() || kept[k]) {
            throw Error(ErrorKind::InvalidMatrix, "kept subsystem index out of range or repeated");
        }
        kept[k] = true;
    }

    TraceLayout layout;
    for (std::size_t s = 0; s < dims.size(); ++s) {
        (kept[s] ? layout.kept_dim : layout.traced_dim) *= dims[s];
    }
    layout.full_index.resize(total_dim);

    std::vector<std::size_t> digits(dims.size(), 0);
    for (std::size_t full = 0; full < total_dim; ++full) {
        std::size_t k = 0;
        std::size_t t = 0;
        for (std::size_t s = 0; s < dims.size(); ++s) {
            if (kept[s]) {
                k = k * dims[s] + digits[s];
            } else {
                t = t * dims[s] + digits[s];
            }
        }
        layout.full_index[t * layout.kept_dim + k] = full;
        for (std::size_t s = dims.size(); s-- > 0;) {
            if (++digits[s] < dims[s]) {
                break;
            }
            digits[s] = 0;
        }
    }
    return layout;
}

}  // namespace detail

/// Traces out every subsystem not listed in `keep`. Kept subsystems appear in
/// ascending index order in the result.
inline ComplexMatrix partial_trace(const ComplexMatrix &rho, std::span<const std::size_t> dims,
                                   std::span<const std::size_t> keep) {
    if (!rho.is_square()) {
        throw Error(ErrorKind::InvalidMatrix, "partial trace of non-square matrix");
    }
    const auto layout = detail::make_trace_layout(rho.rows(), dims, keep);
    ComplexMatrix out(layout.kept_dim, layout.kept_dim);
    for (std::size_t t = 0; t < layout.traced_dim; ++t) {
        const std::size_t *block = &layout.full_index[t * layout.kept_dim];
        for (std::size_t r = 0; r < layout.kept_dim; ++r) {
            for (std::size_t c = 0; c < layout.kept_dim; ++c) {
                out(r, c) += rho(block[r], block[c]);
            }
        }
    }
    return out;
}

/// Reduced density matrix of |psi><psi| without materialising the full
/// projector.
inline ComplexMatrix partial_trace_pure(std::span<const cplx> psi, std::span<const std::size_t> dims,
                                        std::span<const std::size_t> keep) {
    const auto layout = detail::make_trace_layout(psi.size(), dims, keep);
    ComplexMatrix out(layout.kept_dim, layout.kept_dim);
    for (std::size_t t = 0; t < layout.traced_dim; ++t) {
        const std::size_t *block = &layout.full_index[t * layout.kept_dim];
        for (std::size_t r = 0; r < layout.kept_dim; ++r) {
            const cplx a = psi[block[r]];
            for (std::size_t c = 0; c < layout.kept_dim; ++c) {
                out(r, c) += a * std::conj(psi[block[c]]);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns are eigenvectors

    std::vector<cplx> vector(std::size_t i) const {
        std::vector<cplx> v(vectors.rows());
        for (std::size_t r = 0; r < vectors.rows(); ++r) {
            v[r] = vectors(r, i);
        }
        return v;
    }

    ComplexMatrix reconstruct() const {
        ComplexMatrix scaled = vectors;
        for (std::size_t r = 0; r < scaled.rows(); ++r) {
            for (std::size_t c = 0; c < scaled.cols(); ++c) {
                scaled(r, c) *= values[c];
            }
        }
        return scaled * vectors.adjoint();
    }
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix &a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(s);
}

// Index of the largest-magnitude entry; near-ties resolve to the lowest index.
template <typename Getter>
std::size_t dominant_index(std::size_t n, Getter magnitude) {
    std::size_t best = 0;
    double best_mag = magnitude(0);
    for (std::size_t i = 1; i < n; ++i) {
        const double m = magnitude(i);
        if (m > best_mag + 1e-12 * std::max(1.0, best_mag)) {
            best = i;
            best_mag = m;
        }
    }
    return best;
}

}  // namespace detail

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Eigenvalues ascending; each eigenvector is phased so that its
/// largest-magnitude component is real and positive.
inline EigenDecomposition eigh(const ComplexMatrix &input) {
    if (!input.is_square() || input.rows() == 0) {
        throw Error(ErrorKind::InvalidMatrix, "eigh requires a non-empty square matrix");
    }
    if (hermiticity_error(input) >= kHermitianTolerance) {
        throw Error(ErrorKind::InvalidMatrix, "eigh requires a Hermitian matrix");
    }
    const std::size_t n = input.rows();

    // Work on the exactly Hermitian part.
    ComplexMatrix a = input;
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = a(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const cplx avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(1.0, frobenius_norm(a));
    bool converged = detail::off_diagonal_norm(a) <= kJacobiOffDiagonalTolerance * scale;
    for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx g = a(p, q);
                const double mag = std::abs(g);
                if (mag <= std::numeric_limits<double>::min()) {
                    continue;
                }
                const cplx phase = std::conj(g / mag);  // e^{-i phi}
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = t * c;

                const cplx u_pp = c;
                const cplx u_pq = s;
                const cplx u_qp = -s * phase;
                const cplx u_qq = c * phase;

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx x = a(k, p);
                    const cplx y = a(k, q);
                    a(k, p) = x * u_pp + y * u_qp;
                    a(k, q) = x * u_pq + y * u_qq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx x = a(p, k);
                    const cplx y = a(q, k);
                    a(p, k) = std::conj(u_pp) * x + std::conj(u_qp) * y;
                    a(q, k) = std::conj(u_pq) * x + std::conj(u_qq) * y;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx x = v(k, p);
                    const cplx y = v(k, q);
                    v(k, p) = x * u_pp + y * u_qp;
                    v(k, q) = x * u_pq + y * u_qq;
                }
            }
        }
        converged = detail::off_diagonal_norm(a) <= kJacobiOffDiagonalTolerance * scale;
    }
    if (!converged) {
        throw Error(ErrorKind::ConvergenceFailure, "Jacobi sweeps exceeded the iteration cap");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.values[j] = a(src, src).real();
        const std::size_t lead = detail::dominant_index(n, [&](std::size_t r) { return std::abs(v(r, src)); });
        const cplx lead_value = v(lead, src);
        const cplx fix = std::conj(lead_value) / std::abs(lead_value);
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, j) = v(r, src) * fix;
        }
        out.vectors(lead, j) = std::abs(lead_value);
    }
    return out;
}

/// Maps eigenvalues in [-1e-12, 0) to exactly zero; anything more negative is
/// left alone for the caller to reject.
inline double clamp_eigenvalue(double lambda) {
    return (lambda < 0.0 && lambda >= -kEigenClampTolerance) ? 0.0 : lambda;
}

inline ComplexMatrix sqrtm_psd(const ComplexMatrix &a) {
    auto eig = eigh(a);
    for (auto &lambda : eig.values) {
        lambda = clamp_eigenvalue(lambda);
        if (lambda < 0.0) {
            throw Error(ErrorKind::NotPositiveSemidefinite,
                        "eigenvalue " + std::to_string(lambda) + " below clamp tolerance");
        }
        lambda = std::sqrt(lambda);
    }
    auto root = eig.reconstruct();
    // Enforce exact Hermiticity of the result.
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

// ---------------------------------------------------------------------------
// 3x3 real symmetric matrices (the M and W optimisation matrices)

class Sym3Matrix {
   public:
    Sym3Matrix() = default;

    static Sym3Matrix diagonal(double a, double b, double c) {
        Sym3Matrix s;
        s.set(0, 0, a);
        s.set(1, 1, b);
        s.set(2, 2, c);
        return s;
    }

    void set(std::size_t i, std::size_t j, double value) {
        m_[i * 3 + j] = value;
        m_[j * 3 + i] = value;
    }

    double operator()(std::size_t i, std::size_t j) const { return m_[i * 3 + j]; }

    double quadratic_form(const std::array<double, 3> &r) const {
        double s = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                s += r[i] * (*this)(i, j) * r[j];
            }
        }
        return s;
    }

    ComplexMatrix to_complex() const {
        ComplexMatrix out(3, 3);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                out(i, j) = (*this)(i, j);
            }
        }
        return out;
    }

   private:
    std::array<double, 9> m_{};
};

struct TopEigenpair {
    double value = 0.0;
    std::array<double, 3> direction{1.0, 0.0, 0.0};
};

/// Largest eigenvalue of a symmetric 3x3 matrix with a reproducible unit
/// eigenvector: largest-magnitude component positive, and inside a
/// degenerate top eigenspace the vector whose dominant axis has the lowest
/// index wins.
inline TopEigenpair max_eig_sym3(const Sym3Matrix &s) {
    std::array<std::array<double, 3>, 3> a{};
    std::array<std::array<double, 3>, 3> v{};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            a[i][j] = s(i, j);
        }
        v[i][i] = 1.0;
    }
    double scale = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            scale += a[i][j] * a[i][j];
        }
    }
    scale = std::max(1.0, std::sqrt(scale));

    auto off = [&] { return std::sqrt(2.0 * (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2])); };
    for (int sweep = 0; sweep < kJacobiMaxSweeps && off() > kJacobiOffDiagonalTolerance * scale; ++sweep) {
        for (std::size_t p = 0; p < 2; ++p) {
            for (std::size_t q = p + 1; q < 3; ++q) {
                const double apq = a[p][q];
                if (std::abs(apq) <= std::numeric_limits<double>::min()) {
                    continue;
                }
                const double tau = (a[q][q] - a[p][p]) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::hypot(1.0, t);
                const double sn = t * c;
                for (std::size_t k = 0; k < 3; ++k) {
                    const double x = a[k][p];
                    const double y = a[k][q];
                    a[k][p] = c * x - sn * y;
                    a[k][q] = sn * x + c * y;
                }
                for (std::size_t k = 0; k < 3; ++k) {
                    const double x = a[p][k];
                    const double y = a[q][k];
                    a[p][k] = c * x - sn * y;
                    a[q][k] = sn * x + c * y;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for (std::size_t k = 0; k < 3; ++k) {
                    const double x = v[k][p];
                    const double y = v[k][q];
                    v[k][p] = c * x - sn * y;
                    v[k][q] = sn * x + c * y;
                }
            }
        }
    }

    const double top = std::max({a[0][0], a[1][1], a[2][2]});
    const double tie = 1e-12 * std::max(1.0, std::abs(top));

    TopEigenpair best;
    best.value = top;
    std::size_t best_axis = 3;
    double best_mag = -1.0;
    for (std::size_t j = 0; j < 3; ++j) {
        if (a[j][j] < top - tie) {
            continue;
        }
        std::array<double, 3> dir{v[0][j], v[1][j], v[2][j]};
        const std::size_t axis = detail::dominant_index(3, [&](std::size_t r) { return std::abs(dir[r]); });
        if (dir[axis] < 0.0) {
            for (auto &x : dir) {
                x = -x;
            }
        }
        if (axis < best_axis || (axis == best_axis && dir[axis] > best_mag)) {
            best_axis = axis;
            best_mag = dir[axis];
            best.direction = dir;
        }
    }
    return best;
}

}  // namespace glauber
