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

#include "geomur/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "geomur/error.hpp"
#include "geomur/random.hpp"

namespace geomur {

DensityMatrix::DensityMatrix(const ComplexMatrix &m, const Tolerances &tol) {
    if (m.dim() == 0)
        throw Error(ErrorCode::InvalidState, "density matrix of dimension 0");
    if (!is_finite(m))
        throw Error(ErrorCode::DomainError, "density matrix has non-finite entries");
    const double defect = hermiticity_defect(m);
    if (defect > tol.hermitian)
        throw Error(ErrorCode::NotHermitian, "density matrix: max |rho - rho^dagger| = " +
                                                 std::to_string(defect));
    matrix_ = hermitian_part(m);
    const double trace = mat_trace(matrix_).real();
    if (std::abs(trace - 1.0) > tol.trace_one)
        throw Error(ErrorCode::InvalidState, "density matrix trace " + std::to_string(trace));
    const EigenDecomposition eig = hermitian_eig(matrix_, tol);
    if (eig.eigenvalues.front() < -tol.psd_negative)
        throw Error(ErrorCode::NotPSD,
                    "density matrix eigenvalue " + std::to_string(eig.eigenvalues.front()));
}

DensityMatrix DensityMatrix::from_pure(const PureState &psi) {
    return DensityMatrix(ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    ComplexMatrix m = ComplexMatrix::identity(dim);
    m *= 1.0 / static_cast<double>(dim);
    return DensityMatrix(m);
}

std::size_t DensityMatrix::rank(const Tolerances &tol) const {
    const EigenDecomposition eig = hermitian_eig(matrix_, tol);
    std::size_t r = 0;
    for (double lambda : eig.eigenvalues)
        if (lambda > tol.rank)
            ++r;
    return r;
}

PureState::PureState(ComplexVector amplitudes, const Tolerances &tol)
    : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty())
        throw Error(ErrorCode::InvalidState, "pure state of dimension 0");
    const double n = norm2(amplitudes_);
    if (!std::isfinite(n) || std::abs(n - 1.0) > tol.unit_norm)
        throw Error(ErrorCode::InvalidState, "pure state norm " + std::to_string(n));
}

PureState PureState::normalized(ComplexVector amplitudes) {
    const double n = norm2(amplitudes);
    if (!(n > 0.0) || !std::isfinite(n))
        throw Error(ErrorCode::InvalidState, "cannot normalise a zero or non-finite vector");
    for (auto &z : amplitudes)
        z /= n;
    return PureState(std::move(amplitudes));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
    if (index >= dim)
        throw Error(ErrorCode::IndexOutOfRange,
                    "basis index " + std::to_string(index) + " for dimension " + std::to_string(dim));
    ComplexVector v(dim);
    v[index] = 1.0;
    return PureState(std::move(v));
}

ProjectiveObservable::ProjectiveObservable(ComplexMatrix eigenbasis, const Tolerances &tol)
    : eigenbasis_(std::move(eigenbasis)) {
    if (eigenbasis_.dim() == 0)
        throw Error(ErrorCode::InvalidState, "observable of dimension 0");
    const ComplexMatrix gram = mat_mul(mat_adjoint(eigenbasis_), eigenbasis_);
    const double defect = max_abs_diff(gram, ComplexMatrix::identity(eigenbasis_.dim()));
    if (defect > tol.orthonormal)
        throw Error(ErrorCode::InvalidState,
                    "eigenbasis not orthonormal: max |E^dagger E - I| = " + std::to_string(defect));
}

ProjectiveObservable ProjectiveObservable::computational(std::size_t dim) {
    return ProjectiveObservable(ComplexMatrix::identity(dim));
}

ProjectiveObservable ProjectiveObservable::fourier(std::size_t dim) {
    ComplexMatrix f(dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) {
            // Reduce jk mod N first so the angle stays small and exact.
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % dim) /
                                 static_cast<double>(dim);
            f(j, k) = std::polar(scale, angle);
        }
    return ProjectiveObservable(std::move(f));
}

ComplexVector ProjectiveObservable::eigenvector(std::size_t i) const {
    if (i >= dim())
        throw Error(ErrorCode::IndexOutOfRange,
                    "outcome " + std::to_string(i) + " for dimension " + std::to_string(dim()));
    return eigenbasis_.column(i);
}

DensityMatrix projector(const ProjectiveObservable &obs, std::size_t index) {
    const ComplexVector a = obs.eigenvector(index);
    return DensityMatrix(ComplexMatrix::outer(a, a));
}

PureState purify(const DensityMatrix &rho, const Tolerances &tol) {
    return purify(rho, rho.rank(tol), tol);
}

PureState purify(const DensityMatrix &rho, std::size_t aux_dim, const Tolerances &tol) {
    const std::size_t n = rho.dim();
    const EigenDecomposition eig = hermitian_eig(rho.matrix(), tol);
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < n; ++k)
        if (eig.eigenvalues[k] > tol.rank)
            kept.push_back(k);
    if (aux_dim < kept.size())
        throw Error(ErrorCode::DimensionMismatch,
                    "auxiliary dimension " + std::to_string(aux_dim) + " below rank " +
                        std::to_string(kept.size()));

    ComplexVector psi(n * aux_dim);
    double weight = 0.0;
    for (std::size_t k = 0; k < kept.size(); ++k) {
        const double lambda = eig.eigenvalues[kept[k]];
        weight += lambda;
        const double amp = std::sqrt(lambda);
        for (std::size_t i = 0; i < n; ++i)
            psi[i * aux_dim + k] = amp * eig.eigenvectors(i, kept[k]);
    }
    // Dropped eigenvalues are below tol.rank; renormalise to a unit vector.
    const double scale = 1.0 / std::sqrt(weight);
    for (auto &z : psi)
        z *= scale;
    return PureState(std::move(psi));
}

DensityMatrix partial_trace_aux(const PureState &psi, std::size_t sys_dim, std::size_t aux_dim) {
    if (psi.dim() != sys_dim * aux_dim)
        throw Error(ErrorCode::DimensionMismatch,
                    "state of dimension " + std::to_string(psi.dim()) + " is not " +
                        std::to_string(sys_dim) + " x " + std::to_string(aux_dim));
    ComplexMatrix rho(sys_dim);
    for (std::size_t m = 0; m < sys_dim; ++m)
        for (std::size_t n = m; n < sys_dim; ++n) {
            Complex s{};
            for (std::size_t k = 0; k < aux_dim; ++k)
                s += psi[m * aux_dim + k] * std::conj(psi[n * aux_dim + k]);
            rho(m, n) = s;
            rho(n, m) = std::conj(s);
        }
    return DensityMatrix(rho);
}

PureState apply_aux_unitary(const PureState &psi, std::size_t sys_dim, const ComplexMatrix &u) {
    const std::size_t aux_dim = u.dim();
    if (psi.dim() != sys_dim * aux_dim)
        throw Error(ErrorCode::DimensionMismatch, "aux unitary does not match state dimension");
    ComplexVector out(psi.dim());
    for (std::size_t n = 0; n < sys_dim; ++n)
        for (std::size_t k = 0; k < aux_dim; ++k) {
            Complex s{};
            for (std::size_t l = 0; l < aux_dim; ++l)
                s += u(k, l) * psi[n * aux_dim + l];
            out[n * aux_dim + k] = s;
        }
    return PureState::normalized(std::move(out));
}

ComplexMatrix sample_haar_unitary(std::size_t dim, std::uint64_t seed) {
    if (dim == 0)
        throw Error(ErrorCode::DomainError, "Haar unitary of dimension 0");
    Rng rng(seed);
    const double scale = std::sqrt(0.5);
    std::vector<ComplexVector> cols(dim, ComplexVector(dim));
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i) {
            const double re = rng.normal();
            const double im = rng.normal();
            cols[j][i] = Complex(scale * re, scale * im);
        }

    // Modified Gram-Schmidt, two passes. R_jj is the positive norm of the
    // projected column, which fixes the phase convention for Haar measure.
    ComplexMatrix q(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        ComplexVector &v = cols[j];
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < j; ++k) {
                const ComplexVector qk = q.column(k);
                const Complex r = inner(qk, v);
                for (std::size_t i = 0; i < dim; ++i)
                    v[i] -= r * qk[i];
            }
        const double n = norm2(v);
        for (std::size_t i = 0; i < dim; ++i)
            q(i, j) = v[i] / n;
    }
    return q;
}

PureState sample_pure(std::size_t dim, std::uint64_t seed) {
    if (dim == 0)
        throw Error(ErrorCode::DomainError, "pure state of dimension 0");
    // Column 0 of sample_haar_unitary(dim, seed): the first Ginibre column
    // (drawn first from the same stream), normalised.
    Rng rng(seed);
    ComplexVector v(dim);
    for (auto &z : v) {
        const double re = rng.normal();
        const double im = rng.normal();
        z = Complex(re, im);
    }
    return PureState::normalized(std::move(v));
}

DensityMatrix sample_mixed(std::size_t dim, std::size_t aux_dim, std::uint64_t seed) {
    if (aux_dim == 0)
        throw Error(ErrorCode::DomainError, "auxiliary dimension must be positive");
    return partial_trace_aux(sample_pure(dim * aux_dim, seed), dim, aux_dim);
}

ProjectiveObservable sample_observable(std::size_t dim, std::uint64_t seed) {
    return ProjectiveObservable(sample_haar_unitary(dim, seed));
}

} // namespace geomur
