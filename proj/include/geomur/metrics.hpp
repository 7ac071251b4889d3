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

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "geomur/states.hpp"

namespace geomur {

enum class MetricKind { Angle, Bures, RootInfidelity };

inline constexpr MetricKind kAllMetricKinds[] = {MetricKind::Angle, MetricKind::Bures,
                                                 MetricKind::RootInfidelity};

/// CLI names: "angle", "bures", "root-infidelity".
std::string_view to_string(MetricKind kind) noexcept;
std::optional<MetricKind> parse_metric_kind(std::string_view name) noexcept;

/**
 * f(x) for the named metric: arccos(sqrt x), sqrt(2 - 2 sqrt x) or
 * sqrt(1 - x). Inputs within tol.unit_interval_guard of [0, 1] are clamped;
 * anything further out throws DomainError.
 */
double f_of(MetricKind kind, double x, const Tolerances &tol = kDefaultTolerances);

/**
 * A fidelity-based metric d = f(F) with f decreasing on [0, 1] and f(1) = 0.
 * Wraps either one of the built-in kinds or a user-supplied f; the
 * uncertainty relations hold for any member of the family.
 */
class FidelityMetric {
  public:
    FidelityMetric(MetricKind kind) : kind_(kind), name_(to_string(kind)) {} // NOLINT

    /// Checks f(1) == 0 and strict decrease on a grid of `grid` points;
    /// throws DomainError otherwise.
    static FidelityMetric custom(std::string name, std::function<double(double)> f,
                                 int grid = 1001);

    [[nodiscard]] double operator()(double x, const Tolerances &tol = kDefaultTolerances) const;
    [[nodiscard]] const std::string &name() const noexcept { return name_; }
    /// Empty for custom metrics.
    [[nodiscard]] std::optional<MetricKind> kind() const noexcept { return kind_; }

  private:
    FidelityMetric(std::string name, std::function<double(double)> f)
        : name_(std::move(name)), custom_(std::move(f)) {}

    std::optional<MetricKind> kind_;
    std::string name_;
    std::function<double(double)> custom_;
};

/// f(F(rho, sigma)).
double metric_distance(const FidelityMetric &metric, const DensityMatrix &rho,
                       const DensityMatrix &sigma, const Tolerances &tol = kDefaultTolerances);

/// arccos |<psi|phi>|
double wootters_distance(const PureState &psi, const PureState &phi);

} // namespace geomur
