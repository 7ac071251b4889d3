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
#include <string>
#include <utility>
#include <vector>

#include "geomur/metrics.hpp"

namespace geomur {

/// Region of allowed (P_A, P_B) for one metric at overlap c in dimension N.
struct DomainSpec {
    MetricKind kind;
    double overlap_c;
    std::size_t dim;

    /// Throws DomainError unless dim >= 2 and 1/sqrt(N) - guard <= c <= 1 + guard.
    void validate(const Tolerances &tol = kDefaultTolerances) const;
};

/**
 * Curved branch of the boundary, defined for p in [c^2, 1]:
 *   angle            (sqrt(1-p) sqrt(1-c^2) + c sqrt p)^2
 *   bures            (sqrt p + 2 sqrt(1 - sqrt p) sqrt(1-c) + c - 1)^2
 *   root-infidelity  p + 2 sqrt(1-p) sqrt(1-c^2) + c^2 - 1
 * The result is clamped to [0, 1].
 */
double h_boundary(MetricKind kind, double c, double p,
                  const Tolerances &tol = kDefaultTolerances);

/// 1 on [1/N, c^2], h_boundary on [c^2, 1].
double g_boundary(MetricKind kind, double c, double p, std::size_t dim,
                  const Tolerances &tol = kDefaultTolerances);

/// Both probabilities inside the guarded box [1/N, 1] and p_b <= g(p_a) + guard.
bool in_domain(MetricKind kind, double c, std::size_t dim, double p_a, double p_b,
               const Tolerances &tol = kDefaultTolerances) noexcept;

/**
 * The relation rewritten as xi^2 + a1 xi + a0 >= 0 in a substitution
 * variable xi that depends on P_B only:
 *   angle, root-infidelity: xi = sqrt(1 - P_B)
 *   bures:                  xi = sqrt(2 - 2 sqrt P_B)
 */
struct QuadraticForm {
    std::string xi_semantics;
    double xi = 0.0;
    double a1 = 0.0;
    double a0 = 0.0;

    [[nodiscard]] double discriminant() const noexcept { return a1 * a1 - 4.0 * a0; }
    /// Roots (xi_minus, xi_plus); a negative discriminant within round-off
    /// is treated as zero.
    [[nodiscard]] std::pair<double, double> roots() const noexcept;
    /// Polynomial value at xi.
    [[nodiscard]] double value() const noexcept { return xi * xi + a1 * xi + a0; }
};

QuadraticForm quadratic_form(MetricKind kind, double c, double p_a, double p_b,
                             const Tolerances &tol = kDefaultTolerances);

/// Upper bound on P_B obtained from the larger root of the quadratic by
/// undoing the xi substitution. Requires p_a in [c^2, 1].
double boundary_from_quadratic(MetricKind kind, double c, double p_a,
                               const Tolerances &tol = kDefaultTolerances);

struct RegionPoint {
    double p;
    double g;
};

/// `n_points` samples of g on a uniform grid over [1/N, 1] (last point exactly 1).
std::vector<RegionPoint> region_samples(const DomainSpec &spec, std::size_t n_points,
                                        const Tolerances &tol = kDefaultTolerances);

/// "p,g" header then one row per sample, shortest round-trip formatting.
std::string region_to_csv(const std::vector<RegionPoint> &points);
std::string region_to_json(const DomainSpec &spec, const std::vector<RegionPoint> &points);
/// region_<kind>_<c>.csv with c in shortest round-trip decimal form.
std::string region_filename(MetricKind kind, double c);

} // namespace geomur
