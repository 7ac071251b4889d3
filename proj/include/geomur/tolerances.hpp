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

namespace geomur {

/**
 * Every numerical threshold used by the library. All values are absolute
 * unless the field comment says otherwise. Functions take a
 * `const Tolerances &` defaulting to `kDefaultTolerances`.
 */
struct Tolerances {
    /// Max element of |H - H^dagger| accepted as Hermitian.
    double hermitian = 1e-10;
    /// Jacobi stops once the off-diagonal Frobenius norm drops below
    /// `jacobi_offdiag * max(1, ||H||_F)`.
    double jacobi_offdiag = 1e-12;
    int jacobi_max_sweeps = 100;
    /// Eigenvalues in [-psd_negative, 0) are clamped to zero; below that
    /// the matrix is rejected as not PSD.
    double psd_negative = 1e-10;
    /// Eigenvalues with |lambda| <= psd_zero * max(1, lambda_max) are
    /// treated as exact zeros before taking square roots.
    double psd_zero = 1e-14;
    /// Eigenvalues above this count toward the rank of a density matrix.
    double rank = 1e-10;
    double trace_one = 1e-10;
    double unit_norm = 1e-12;
    double orthonormal = 1e-10;
    /// Guard band for quantities that must lie in [0, 1] (fidelity,
    /// probabilities fed to f).
    double unit_interval_guard = 1e-9;
    /// Largest imaginary part tolerated in an expectation value.
    double imaginary = 1e-10;
    /// Default UR violation threshold on the slack.
    double ur_slack = 1e-9;
};

inline constexpr Tolerances kDefaultTolerances{};

} // namespace geomur
