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
#include <vector>

#include "geomur/metrics.hpp"
#include "geomur/states.hpp"

namespace geomur {

/// p_i = <a_i|rho|a_i>, clamped into [0, 1].
std::vector<double> outcome_probabilities(const ProjectiveObservable &obs,
                                          const DensityMatrix &rho,
                                          const Tolerances &tol = kDefaultTolerances);

struct MaxProbability {
    double value;
    /// Smallest index attaining the maximum.
    std::size_t index;
};

MaxProbability max_probability(const ProjectiveObservable &obs, const DensityMatrix &rho,
                               const Tolerances &tol = kDefaultTolerances);

/// c = max_ij |<a_i|b_j>|, clamped into [0, 1].
double overlap(const ProjectiveObservable &a, const ProjectiveObservable &b);

/// c = max_ij sqrt(Tr(Pi^A_i Pi^B_j)); the projector form of overlap().
double overlap_from_projectors(const ProjectiveObservable &a, const ProjectiveObservable &b);

/// U(A; rho) = f(P_A).
double uncertainty_measure(const FidelityMetric &metric, const ProjectiveObservable &obs,
                           const DensityMatrix &rho, const Tolerances &tol = kDefaultTolerances);

/**
 * One evaluation of U(A) + U(B) >= f(c^2). Field names match the JSON
 * serialisation.
 */
struct URReport {
    double p_max_a = 0.0;
    double p_max_b = 0.0;
    double u_a = 0.0;
    double u_b = 0.0;
    double overlap_c = 0.0;
    double bound = 0.0;
    /// u_a + u_b - bound
    double slack = 0.0;

    [[nodiscard]] bool violates(double tolerance) const noexcept { return slack < -tolerance; }

    friend bool operator==(const URReport &, const URReport &) = default;
};

/// Never throws on a violated relation; inspect report.violates().
URReport check_ur(const FidelityMetric &metric, const ProjectiveObservable &a,
                  const ProjectiveObservable &b, const DensityMatrix &rho,
                  const Tolerances &tol = kDefaultTolerances);

/// Evaluates the relation from already-measured P_A, P_B and c.
URReport ur_from_probabilities(const FidelityMetric &metric, double p_max_a, double p_max_b,
                               double overlap_c, const Tolerances &tol = kDefaultTolerances);

/// Bures relation in its halved form sqrt(1 - sqrt P_A) + sqrt(1 - sqrt P_B)
/// >= sqrt(1 - c); equal to the Bures report scaled by 1/sqrt(2).
struct BuresHalvedForm {
    double lhs;
    double rhs;
    [[nodiscard]] double slack() const noexcept { return lhs - rhs; }
};

BuresHalvedForm bures_halved_form(const URReport &report) noexcept;

} // namespace geomur
