// Copyright 2026 The geomur Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "geomur/tolerances.hpp"

namespace geomur {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/**
 * Dense square complex matrix, row-major. All entries are finite; the
 * constructors reject NaN/Inf.
 */
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    /// Zero matrix of the given dimension.
    explicit ComplexMatrix(std::size_t dim);
    /// Takes ownership of row-major data; data.size() must equal dim * dim.
    ComplexMatrix(std::size_t dim, std::vector<Complex> data);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix outer(std::span<const Complex> ket,
                               std::span<const Complex> bra);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    Complex &operator()(std::size_t row, std::size_t col) noexcept {
        return data_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const noexcept {
        return data_[row * dim_ + col];
    }

    [[nodiscard]] std::span<const Complex> data() const noexcept { return data_; }

    [[nodiscard]] ComplexVector column(std::size_t col) const;
    void set_column(std::size_t col, std::span<const Complex> values);

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scalar) noexcept;

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs);
ComplexMatrix operator*(ComplexMatrix lhs, Complex scalar);
ComplexMatrix operator*(Complex scalar, ComplexMatrix rhs);

// Basic arithmetic. Dimension disagreements throw DimensionMismatch.
ComplexMatrix mat_mul(const ComplexMatrix &lhs, const ComplexMatrix &rhs);
ComplexMatrix mat_adjoint(const ComplexMatrix &m);
Complex mat_trace(const ComplexMatrix &m) noexcept;
ComplexVector mat_vec(const ComplexMatrix &m, std::span<const Complex> v);

/// <u|v>, conjugating the left argument.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm2(std::span<const Complex> v) noexcept;

double frobenius_norm(const ComplexMatrix &m) noexcept;
double max_abs(const ComplexMatrix &m) noexcept;
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
/// max_ij |H_ij - conj(H_ji)|
double hermiticity_defect(const ComplexMatrix &m) noexcept;
/// (M + M^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix &m);
bool is_finite(const ComplexMatrix &m) noexcept;

struct EigenDecomposition {
    /// Ascending.
    std::vector<double> eigenvalues;
    /// Column k is the unit eigenvector for eigenvalues[k].
    ComplexMatrix eigenvectors;

    /// V diag(lambda) V^dagger
    [[nodiscard]] ComplexMatrix reconstruct() const;
};

/**
 * Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
 * rotations. Eigenvalues are returned ascending with eigenvector columns
 * permuted alongside; equal eigenvalues keep their diagonal order.
 *
 * Throws NotHermitian when hermiticity_defect(h) exceeds tol.hermitian and
 * NoConvergence after tol.jacobi_max_sweeps sweeps.
 */
EigenDecomposition hermitian_eig(const ComplexMatrix &h,
                                 const Tolerances &tol = kDefaultTolerances);

/// Spectral map V diag(fn(lambda)) V^dagger.
template <class Fn>
ComplexMatrix spectral_apply(const EigenDecomposition &eig, Fn &&fn) {
    const std::size_t n = eig.eigenvalues.size();
    std::vector<double> mapped(n);
    for (std::size_t k = 0; k < n; ++k)
        mapped[k] = fn(eig.eigenvalues[k]);
    return EigenDecomposition{std::move(mapped), eig.eigenvectors}.reconstruct();
}

/// Eigenvalues of a PSD matrix after clamping round-off negatives and
/// zeroing values inside the psd_zero band. Throws NotPSD.
std::vector<double> clamp_psd_spectrum(std::span<const double> eigenvalues,
                                       const Tolerances &tol = kDefaultTolerances);

/// Principal square root of a positive-semidefinite matrix.
ComplexMatrix psd_sqrt(const ComplexMatrix &m,
                       const Tolerances &tol = kDefaultTolerances);

/// Trace norm: sum of singular values, via the eigenvalues of M^dagger M.
double nuclear_norm(const ComplexMatrix &m,
                    const Tolerances &tol = kDefaultTolerances);

} // namespace geomur
