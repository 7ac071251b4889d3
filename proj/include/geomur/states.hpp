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

#include <cstddef>
#include <cstdint>

#include "geomur/linalg.hpp"

namespace geomur {

class PureState;

/**
 * Hermitian, positive-semidefinite, unit-trace matrix. Construction
 * validates all three properties and stores the Hermitian part of the
 * input, so the stored matrix is exactly Hermitian.
 */
class DensityMatrix {
  public:
    explicit DensityMatrix(const ComplexMatrix &m, const Tolerances &tol = kDefaultTolerances);

    static DensityMatrix from_pure(const PureState &psi);
    static DensityMatrix maximally_mixed(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return matrix_.dim(); }
    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return matrix_; }

    /// Number of eigenvalues above tol.rank.
    [[nodiscard]] std::size_t rank(const Tolerances &tol = kDefaultTolerances) const;

  private:
    ComplexMatrix matrix_;
};

/// Unit-norm amplitude vector.
class PureState {
  public:
    explicit PureState(ComplexVector amplitudes, const Tolerances &tol = kDefaultTolerances);

    /// Rescales a non-zero vector to unit norm.
    static PureState normalized(ComplexVector amplitudes);
    /// Computational basis vector |index>.
    static PureState basis(std::size_t dim, std::size_t index);

    [[nodiscard]] std::size_t dim() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] const ComplexVector &amplitudes() const noexcept { return amplitudes_; }
    const Complex &operator[](std::size_t i) const noexcept { return amplitudes_[i]; }

  private:
    ComplexVector amplitudes_;
};

/**
 * A non-degenerate observable, represented by its orthonormal eigenbasis
 * (columns of `eigenbasis`). Eigenvalue labels never enter any formula and
 * are not stored.
 */
class ProjectiveObservable {
  public:
    explicit ProjectiveObservable(ComplexMatrix eigenbasis,
                                  const Tolerances &tol = kDefaultTolerances);

    static ProjectiveObservable computational(std::size_t dim);
    /// Discrete Fourier basis, |f_k> = sum_j exp(2 pi i jk / N) |j> / sqrt(N).
    static ProjectiveObservable fourier(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return eigenbasis_.dim(); }
    [[nodiscard]] const ComplexMatrix &eigenbasis() const noexcept { return eigenbasis_; }
    [[nodiscard]] ComplexVector eigenvector(std::size_t i) const;

  private:
    ComplexMatrix eigenbasis_;
};

/// Rank-one projector |a_i><a_i| onto the i-th eigenvector.
DensityMatrix projector(const ProjectiveObservable &obs, std::size_t index);

/**
 * Spectral purification sum_k sqrt(lambda_k) |v_k> (x) |e_k> over the
 * eigenvalues above tol.rank, in dimension N * rank. Flat index of
 * |n> (x) |k> is n * K + k.
 */
PureState purify(const DensityMatrix &rho, const Tolerances &tol = kDefaultTolerances);

/// Same construction with the auxiliary factor padded to `aux_dim` >= rank.
PureState purify(const DensityMatrix &rho, std::size_t aux_dim,
                 const Tolerances &tol = kDefaultTolerances);

/// Tr_aux |psi><psi| with psi of dimension sys_dim * aux_dim.
DensityMatrix partial_trace_aux(const PureState &psi, std::size_t sys_dim, std::size_t aux_dim);

/// (I_sys (x) U) |psi>.
PureState apply_aux_unitary(const PureState &psi, std::size_t sys_dim, const ComplexMatrix &u);

/// Haar-distributed unitary: Ginibre matrix orthonormalised column by column
/// (QR with real positive diagonal in R).
ComplexMatrix sample_haar_unitary(std::size_t dim, std::uint64_t seed);
PureState sample_pure(std::size_t dim, std::uint64_t seed);
/// Reduced state of a Haar pure state on dim * aux_dim.
DensityMatrix sample_mixed(std::size_t dim, std::size_t aux_dim, std::uint64_t seed);
ProjectiveObservable sample_observable(std::size_t dim, std::uint64_t seed);

} // namespace geomur
