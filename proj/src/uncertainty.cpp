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

#include "geomur/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geomur/error.hpp"

namespace geomur {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
    if (a != b)
        throw Error(ErrorCode::DimensionMismatch,
                    "dimension " + std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace

std::vector<double> outcome_probabilities(const ProjectiveObservable &obs,
                                          const DensityMatrix &rho, const Tolerances &tol) {
    require_same_dim(obs.dim(), rho.dim());
    const std::size_t n = obs.dim();
    const ComplexMatrix &basis = obs.eigenbasis();
    const ComplexMatrix &m = rho.matrix();
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex value{};
        for (std::size_t r = 0; r < n; ++r) {
            Complex row{};
            for (std::size_t s = 0; s < n; ++s)
                row += m(r, s) * basis(s, i);
            value += std::conj(basis(r, i)) * row;
        }
        if (std::abs(value.imag()) > tol.imaginary)
            throw Error(ErrorCode::DomainError,
                        "<a_i|rho|a_i> has imaginary part " + std::to_string(value.imag()));
        p[i] = std::clamp(value.real(), 0.0, 1.0);
    }
    return p;
}

MaxProbability max_probability(const ProjectiveObservable &obs, const DensityMatrix &rho,
                               const Tolerances &tol) {
    const std::vector<double> p = outcome_probabilities(obs, rho, tol);
    const auto it = std::max_element(p.begin(), p.end());
    return {*it, static_cast<std::size_t>(it - p.begin())};
}

double overlap(const ProjectiveObservable &a, const ProjectiveObservable &b) {
    require_same_dim(a.dim(), b.dim());
    const ComplexMatrix cross = mat_mul(mat_adjoint(a.eigenbasis()), b.eigenbasis());
    return std::min(1.0, max_abs(cross));
}

double overlap_from_projectors(const ProjectiveObservable &a, const ProjectiveObservable &b) {
    require_same_dim(a.dim(), b.dim());
    double best = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const DensityMatrix pa = projector(a, i);
        for (std::size_t j = 0; j < b.dim(); ++j) {
            const DensityMatrix pb = projector(b, j);
            const double tr = mat_trace(mat_mul(pa.matrix(), pb.matrix())).real();
            best = std::max(best, tr);
        }
    }
    return std::min(1.0, std::sqrt(best));
}

double uncertainty_measure(const FidelityMetric &metric, const ProjectiveObservable &obs,
                           const DensityMatrix &rho, const Tolerances &tol) {
    return metric(max_probability(obs, rho, tol).value, tol);
}

URReport ur_from_probabilities(const FidelityMetric &metric, double p_max_a, double p_max_b,
                               double overlap_c, const Tolerances &tol) {
    URReport r;
    r.p_max_a = p_max_a;
    r.p_max_b = p_max_b;
    r.overlap_c = overlap_c;
    r.u_a = metric(p_max_a, tol);
    r.u_b = metric(p_max_b, tol);
    r.bound = metric(overlap_c * overlap_c, tol);
    r.slack = r.u_a + r.u_b - r.bound;
    return r;
}

URReport check_ur(const FidelityMetric &metric, const ProjectiveObservable &a,
                  const ProjectiveObservable &b, const DensityMatrix &rho, const Tolerances &tol) {
    require_same_dim(a.dim(), b.dim());
    require_same_dim(a.dim(), rho.dim());
    return ur_from_probabilities(metric, max_probability(a, rho, tol).value,
                                 max_probability(b, rho, tol).value, overlap(a, b), tol);
}

BuresHalvedForm bures_halved_form(const URReport &report) noexcept {
    const auto term = [](double p) { return std::sqrt(std::max(0.0, 1.0 - std::sqrt(p))); };
    return {term(report.p_max_a) + term(report.p_max_b),
            std::sqrt(std::max(0.0, 1.0 - report.overlap_c))};
}

} // namespace geomur
