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

#include "geomur/states.hpp"

namespace geomur {

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to [0, 1].
double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma,
                const Tolerances &tol = kDefaultTolerances);

/// Same quantity by a separate route: ||sqrt(rho) sqrt(sigma)||_1^2.
double fidelity_oracle(const DensityMatrix &rho, const DensityMatrix &sigma,
                       const Tolerances &tol = kDefaultTolerances);

/// |<psi|phi>|^2
double fidelity_pure_pure(const PureState &psi, const PureState &phi);

/// <psi|sigma|psi>; throws DomainError if the imaginary part exceeds
/// tol.imaginary.
double fidelity_pure_mixed(const PureState &psi, const DensityMatrix &sigma,
                           const Tolerances &tol = kDefaultTolerances);

/**
 * Stochastic lower bound on F(rho, sigma) from the purification picture:
 * fix the spectral purification |psi> of rho, and maximise |<psi|phi_U>|^2
 * over `trials` purifications phi_U = (I (x) U)|phi> of sigma, U Haar on the
 * auxiliary factor. Both auxiliary spaces are padded to
 * max(rank rho, rank sigma). Trial t draws U from derive_seed(seed, t).
 */
double purification_overlap_search(const DensityMatrix &rho, const DensityMatrix &sigma,
                                   std::size_t trials, std::uint64_t seed,
                                   const Tolerances &tol = kDefaultTolerances);

} // namespace geomur
