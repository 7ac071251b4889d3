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

#include "geomur/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geomur/error.hpp"
#include "geomur/random.hpp"

namespace geomur {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
    if (a != b)
        throw Error(ErrorCode::DimensionMismatch,
                    "states of dimension " + std::to_string(a) + " and " + std::to_string(b));
}

double clamp_unit(double value, const Tolerances &tol, const char *what) {
    if (!(value >= -tol.unit_interval_guard && value <= 1.0 + tol.unit_interval_guard))
        throw Error(ErrorCode::DomainError,
                    std::string(what) + " = " + std::to_string(value) + " outside [0, 1]");
    return std::clamp(value, 0.0, 1.0);
}

} // namespace

double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma, const Tolerances &tol) {
    require_same_dim(rho.dim(), sigma.dim());
    const ComplexMatrix root = psd_sqrt(rho.matrix(), tol);
    const ComplexMatrix inner_product =
        hermitian_part(mat_mul(mat_mul(root, sigma.matrix()), root));
    const double trace = mat_trace(psd_sqrt(inner_product, tol)).real();
    return clamp_unit(trace * trace, tol, "fidelity");
}

double fidelity_oracle(const DensityMatrix &rho, const DensityMatrix &sigma,
                       const Tolerances &tol) {
    require_same_dim(rho.dim(), sigma.dim());
    const double norm =
        nuclear_norm(mat_mul(psd_sqrt(rho.matrix(), tol), psd_sqrt(sigma.matrix(), tol)), tol);
    return clamp_unit(norm * norm, tol, "fidelity");
}

double fidelity_pure_pure(const PureState &psi, const PureState &phi) {
    require_same_dim(psi.dim(), phi.dim());
    return std::min(1.0, std::norm(inner(psi.amplitudes(), phi.amplitudes())));
}

double fidelity_pure_mixed(const PureState &psi, const DensityMatrix &sigma,
                           const Tolerances &tol) {
    require_same_dim(psi.dim(), sigma.dim());
    const Complex value = inner(psi.amplitudes(), mat_vec(sigma.matrix(), psi.amplitudes()));
    if (std::abs(value.imag()) > tol.imaginary)
        throw Error(ErrorCode::DomainError,
                    "<psi|sigma|psi> has imaginary part " + std::to_string(value.imag()));
    return clamp_unit(value.real(), tol, "fidelity");
}

double purification_overlap_search(const DensityMatrix &rho, const DensityMatrix &sigma,
                                   std::size_t trials, std::uint64_t seed,
                                   const Tolerances &tol) {
    require_same_dim(rho.dim(), sigma.dim());
    if (trials == 0)
        throw Error(ErrorCode::DomainError, "purification search needs at least one trial");
    const std::size_t n = rho.dim();
    const std::size_t aux = std::max(rho.rank(tol), sigma.rank(tol));
    const PureState psi = purify(rho, aux, tol);
    const PureState phi = purify(sigma, aux, tol);

    double best = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const ComplexMatrix u = sample_haar_unitary(aux, derive_seed(seed, t));
        best = std::max(best, fidelity_pure_pure(psi, apply_aux_unitary(phi, n, u)));
    }
    return best;
}

} // namespace geomur
