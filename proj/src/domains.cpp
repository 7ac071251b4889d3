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

#include "geomur/domains.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "geomur/error.hpp"
#include "geomur/format.hpp"

namespace geomur {

namespace {

double checked_overlap(double c, const Tolerances &tol) {
    if (!(c > 0.0 && c <= 1.0 + tol.unit_interval_guard))
        throw Error(ErrorCode::DomainError, "overlap c must lie in (0, 1], got " + std::to_string(c));
    return std::min(c, 1.0);
}

double checked_probability(double p, const Tolerances &tol, const char *what) {
    if (!(p >= -tol.unit_interval_guard && p <= 1.0 + tol.unit_interval_guard))
        throw Error(ErrorCode::DomainError,
                    std::string(what) + " must lie in [0, 1], got " + std::to_string(p));
    return std::clamp(p, 0.0, 1.0);
}

double sqrt0(double x) noexcept { return std::sqrt(std::max(0.0, x)); }

} // namespace

void DomainSpec::validate(const Tolerances &tol) const {
    if (dim < 2)
        throw Error(ErrorCode::DomainError, "dimension must be at least 2");
    const double lower = 1.0 / std::sqrt(static_cast<double>(dim));
    if (!(overlap_c >= lower - tol.unit_interval_guard && overlap_c <= 1.0 + tol.unit_interval_guard))
        throw Error(ErrorCode::DomainError, "overlap " + std::to_string(overlap_c) +
                                                " outside [1/sqrt(N), 1] for N = " +
                                                std::to_string(dim));
}

double h_boundary(MetricKind kind, double c, double p, const Tolerances &tol) {
    c = checked_overlap(c, tol);
    const double c2 = c * c;
    if (!(p >= c2 - tol.unit_interval_guard && p <= 1.0 + tol.unit_interval_guard))
        throw Error(ErrorCode::DomainError,
                    "h is defined on [c^2, 1]; got p = " + std::to_string(p));
    p = std::clamp(p, c2, 1.0);

    double h = 0.0;
    switch (kind) {
    case MetricKind::Angle: {
        const double root = sqrt0(1.0 - p) * sqrt0(1.0 - c2) + c * std::sqrt(p);
        h = root * root;
        break;
    }
    case MetricKind::Bures: {
        const double root = std::sqrt(p) + 2.0 * sqrt0(1.0 - std::sqrt(p)) * sqrt0(1.0 - c) + c - 1.0;
        h = root * root;
        break;
    }
    case MetricKind::RootInfidelity:
        h = p + 2.0 * sqrt0(1.0 - p) * sqrt0(1.0 - c2) + c2 - 1.0;
        break;
    }
    return std::clamp(h, 0.0, 1.0);
}

double g_boundary(MetricKind kind, double c, double p, std::size_t dim, const Tolerances &tol) {
    if (dim == 0)
        throw Error(ErrorCode::DomainError, "dimension must be positive");
    c = checked_overlap(c, tol);
    const double lower = 1.0 / static_cast<double>(dim);
    if (!(p >= lower - tol.unit_interval_guard && p <= 1.0 + tol.unit_interval_guard))
        throw Error(ErrorCode::DomainError,
                    "g is defined on [1/N, 1]; got p = " + std::to_string(p));
    if (p <= c * c)
        return 1.0;
    return h_boundary(kind, c, p, tol);
}

bool in_domain(MetricKind kind, double c, std::size_t dim, double p_a, double p_b,
               const Tolerances &tol) noexcept {
    if (!std::isfinite(c) || !std::isfinite(p_a) || !std::isfinite(p_b) || dim == 0)
        return false;
    const double lower = 1.0 / static_cast<double>(dim) - tol.unit_interval_guard;
    const double upper = 1.0 + tol.unit_interval_guard;
    if (p_a < lower || p_a > upper || p_b < lower || p_b > upper)
        return false;
    try {
        return p_b <= g_boundary(kind, c, std::min(p_a, 1.0), dim, tol) + tol.unit_interval_guard;
    } catch (const Error &) {
        return false;
    }
}

std::pair<double, double> QuadraticForm::roots() const noexcept {
    const double s = std::sqrt(std::max(0.0, discriminant()));
    // Cancellation-free pair: q = -(a1 + sign(a1) s) / 2, roots q and a0 / q.
    const double q = -0.5 * (a1 + std::copysign(s, a1));
    if (q == 0.0)
        return {0.0, 0.0};
    const double r1 = q;
    const double r2 = a0 / q;
    return {std::min(r1, r2), std::max(r1, r2)};
}

QuadraticForm quadratic_form(MetricKind kind, double c, double p_a, double p_b,
                             const Tolerances &tol) {
    c = checked_overlap(c, tol);
    p_a = checked_probability(p_a, tol, "P_A");
    p_b = checked_probability(p_b, tol, "P_B");
    QuadraticForm q;
    switch (kind) {
    case MetricKind::Angle:
        q.xi_semantics = "sqrt(1 - P_B)";
        q.xi = std::sqrt(1.0 - p_b);
        q.a1 = 2.0 * c * std::sqrt(1.0 - p_a);
        q.a0 = c * c - p_a;
        break;
    case MetricKind::Bures:
        // From sqrt(2 - 2 sqrt P_A) + xi >= sqrt(2 - 2c), squared.
        q.xi_semantics = "sqrt(2 - 2 sqrt(P_B))";
        q.xi = sqrt0(2.0 - 2.0 * std::sqrt(p_b));
        q.a1 = 2.0 * sqrt0(2.0 - 2.0 * std::sqrt(p_a));
        q.a0 = 2.0 * (c - std::sqrt(p_a));
        break;
    case MetricKind::RootInfidelity:
        q.xi_semantics = "sqrt(1 - P_B)";
        q.xi = std::sqrt(1.0 - p_b);
        q.a1 = 2.0 * std::sqrt(1.0 - p_a);
        q.a0 = c * c - p_a;
        break;
    }
    return q;
}

double boundary_from_quadratic(MetricKind kind, double c, double p_a, const Tolerances &tol) {
    c = checked_overlap(c, tol);
    const double c2 = c * c;
    if (!(p_a >= c2 - tol.unit_interval_guard && p_a <= 1.0 + tol.unit_interval_guard))
        throw Error(ErrorCode::DomainError,
                    "quadratic boundary needs P_A in [c^2, 1]; got " + std::to_string(p_a));
    p_a = std::clamp(p_a, c2, 1.0);
    const double xi_plus = std::max(0.0, quadratic_form(kind, c, p_a, 1.0, tol).roots().second);

    double p_b = 0.0;
    if (kind == MetricKind::Bures) {
        const double root_pb = 1.0 - 0.5 * xi_plus * xi_plus;
        p_b = root_pb * root_pb;
    } else {
        p_b = 1.0 - xi_plus * xi_plus;
    }
    return std::clamp(p_b, 0.0, 1.0);
}

std::vector<RegionPoint> region_samples(const DomainSpec &spec, std::size_t n_points,
                                        const Tolerances &tol) {
    spec.validate(tol);
    if (n_points < 2)
        throw Error(ErrorCode::DomainError, "region needs at least two points");
    const double lower = 1.0 / static_cast<double>(spec.dim);
    const double step = (1.0 - lower) / static_cast<double>(n_points - 1);
    std::vector<RegionPoint> out;
    out.reserve(n_points);
    for (std::size_t k = 0; k < n_points; ++k) {
        const double p = k + 1 == n_points ? 1.0 : lower + static_cast<double>(k) * step;
        out.push_back({p, g_boundary(spec.kind, spec.overlap_c, p, spec.dim, tol)});
    }
    return out;
}

std::string region_to_csv(const std::vector<RegionPoint> &points) {
    std::ostringstream os;
    os << "p,g\n";
    for (const auto &pt : points)
        os << format_shortest(pt.p) << ',' << format_shortest(pt.g) << '\n';
    return os.str();
}

std::string region_to_json(const DomainSpec &spec, const std::vector<RegionPoint> &points) {
    nlohmann::json j;
    j["metric"] = std::string(to_string(spec.kind));
    j["overlap_c"] = spec.overlap_c;
    j["dim"] = spec.dim;
    auto &rows = j["points"] = nlohmann::json::array();
    for (const auto &pt : points)
        rows.push_back({{"p", pt.p}, {"g", pt.g}});
    return j.dump(2) + "\n";
}

std::string region_filename(MetricKind kind, double c) {
    return "region_" + std::string(to_string(kind)) + "_" + format_shortest(c) + ".csv";
}

} // namespace geomur
