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

#include "geomur/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "geomur/error.hpp"
#include "geomur/fidelity.hpp"

namespace geomur {

std::string_view to_string(MetricKind kind) noexcept {
    switch (kind) {
    case MetricKind::Angle:
        return "angle";
    case MetricKind::Bures:
        return "bures";
    case MetricKind::RootInfidelity:
        return "root-infidelity";
    }
    return "unknown";
}

std::optional<MetricKind> parse_metric_kind(std::string_view name) noexcept {
    for (MetricKind kind : kAllMetricKinds)
        if (to_string(kind) == name)
            return kind;
    return std::nullopt;
}

double f_of(MetricKind kind, double x, const Tolerances &tol) {
    if (!(x >= -tol.unit_interval_guard && x <= 1.0 + tol.unit_interval_guard))
        throw Error(ErrorCode::DomainError, "f(x) needs x in [0, 1], got " + std::to_string(x));
    x = std::clamp(x, 0.0, 1.0);
    switch (kind) {
    case MetricKind::Angle:
        return std::acos(std::min(1.0, std::sqrt(x)));
    case MetricKind::Bures:
        return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::sqrt(x)));
    case MetricKind::RootInfidelity:
        return std::sqrt(1.0 - x);
    }
    throw Error(ErrorCode::DomainError, "unknown metric kind");
}

FidelityMetric FidelityMetric::custom(std::string name, std::function<double(double)> f,
                                      int grid) {
    if (!f)
        throw Error(ErrorCode::DomainError, "custom metric needs a function");
    if (grid < 2)
        grid = 2;
    if (f(1.0) != 0.0)
        throw Error(ErrorCode::DomainError, "custom metric " + name + ": f(1) must be 0");
    double previous = f(0.0);
    for (int k = 1; k < grid; ++k) {
        const double x = static_cast<double>(k) / (grid - 1);
        const double value = f(x);
        if (!(value < previous))
            throw Error(ErrorCode::DomainError,
                        "custom metric " + name + " is not strictly decreasing near x = " +
                            std::to_string(x));
        previous = value;
    }
    return FidelityMetric(std::move(name), std::move(f));
}

double FidelityMetric::operator()(double x, const Tolerances &tol) const {
    if (kind_)
        return f_of(*kind_, x, tol);
    if (!(x >= -tol.unit_interval_guard && x <= 1.0 + tol.unit_interval_guard))
        throw Error(ErrorCode::DomainError, "f(x) needs x in [0, 1], got " + std::to_string(x));
    return custom_(std::clamp(x, 0.0, 1.0));
}

double metric_distance(const FidelityMetric &metric, const DensityMatrix &rho,
                       const DensityMatrix &sigma, const Tolerances &tol) {
    return metric(fidelity(rho, sigma, tol), tol);
}

double wootters_distance(const PureState &psi, const PureState &phi) {
    if (psi.dim() != phi.dim())
        throw Error(ErrorCode::DimensionMismatch, "wootters_distance: dimensions differ");
    return std::acos(std::min(1.0, std::abs(inner(psi.amplitudes(), phi.amplitudes()))));
}

} // namespace geomur
