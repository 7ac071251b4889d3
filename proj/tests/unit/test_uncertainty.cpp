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

#include <cmath>
#include <numbers>
#include <numeric>

#include <gtest/gtest.h>

#include "geomur/error.hpp"
#include "geomur/uncertainty.hpp"
#include "test_support.hpp"

using namespace geomur;
using geomur::testing::random_state;

namespace {

const ProjectiveObservable &computational2() {
    static const auto obs = ProjectiveObservable::computational(2);
    return obs;
}
const ProjectiveObservable &hadamard() {
    static const auto obs = ProjectiveObservable::fourier(2);
    return obs;
}

DensityMatrix eigenstate(const ProjectiveObservable &obs, std::size_t i) { return projector(obs, i); }

} // namespace

TEST(OutcomeProbabilities, EigenstateAndMaximallyMixed) {
    const auto obs = sample_observable(4, 8);
    const auto p = outcome_probabilities(obs, eigenstate(obs, 0));
    EXPECT_NEAR(p[0], 1.0, 1e-12);
    for (std::size_t i = 1; i < 4; ++i)
        EXPECT_NEAR(p[i], 0.0, 1e-12);

    for (double q : outcome_probabilities(obs, DensityMatrix::maximally_mixed(4)))
        EXPECT_NEAR(q, 0.25, 1e-12);
}

TEST(OutcomeProbabilities, HadamardOnZero) {
    const auto p = outcome_probabilities(hadamard(), eigenstate(computational2(), 0));
    EXPECT_NEAR(p[0], 0.5, 1e-15);
    EXPECT_NEAR(p[1], 0.5, 1e-15);
}

TEST(OutcomeProbabilities, SumToOneOnRandomInputs) {
    for (std::size_t n = 2; n <= 10; ++n)
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto p = outcome_probabilities(sample_observable(n, seed), random_state(n, seed + 1));
            EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-9);
            for (double q : p) {
                EXPECT_GE(q, 0.0);
                EXPECT_LE(q, 1.0);
            }
        }
}

TEST(MaxProbability, Examples) {
    const auto comp = ProjectiveObservable::computational(3);
    const auto m = max_probability(comp, eigenstate(comp, 2));
    EXPECT_NEAR(m.value, 1.0, 1e-15);
    EXPECT_EQ(m.index, 2U);

    const auto tie = max_probability(comp, DensityMatrix::maximally_mixed(3));
    EXPECT_NEAR(tie.value, 1.0 / 3.0, 1e-15);
    EXPECT_EQ(tie.index, 0U);

    const double d[] = {0.3, 0.7};
    const auto q = max_probability(computational2(), DensityMatrix(ComplexMatrix::diagonal(d)));
    EXPECT_NEAR(q.value, 0.7, 1e-15);
    EXPECT_EQ(q.index, 1U);
}

TEST(MaxProbability, LiesInOneOverNToOne) {
    for (std::size_t n = 2; n <= 10; ++n)
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const double p = max_probability(sample_observable(n, seed), random_state(n, seed + 3)).value;
            EXPECT_GE(p, 1.0 / n - 1e-9);
            EXPECT_LE(p, 1.0);
        }
}

TEST(Overlap, Examples) {
    const auto a = sample_observable(3, 1);
    EXPECT_NEAR(overlap(a, a), 1.0, 1e-12);
    EXPECT_NEAR(overlap(computational2(), hadamard()), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(overlap(ProjectiveObservable::computational(4), ProjectiveObservable::fourier(4)), 0.5,
                1e-15);
}

TEST(Overlap, ProjectorFormAgreesAndRangeHolds) {
    for (std::size_t n = 2; n <= 8; ++n)
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto a = sample_observable(n, seed);
            const auto b = sample_observable(n, seed + 71);
            const double c = overlap(a, b);
            EXPECT_NEAR(c, overlap_from_projectors(a, b), 1e-10);
            EXPECT_GE(c, 1.0 / std::sqrt(static_cast<double>(n)) - 1e-9);
            EXPECT_LE(c, 1.0);
        }
}

TEST(UncertaintyMeasure, Axioms) {
    const auto obs = sample_observable(5, 2);
    for (MetricKind k : kAllMetricKinds) {
        EXPECT_NEAR(uncertainty_measure(k, obs, eigenstate(obs, 3)), 0.0, 1e-7) << to_string(k);
        const double top = uncertainty_measure(k, obs, DensityMatrix::maximally_mixed(5));
        EXPECT_NEAR(top, f_of(k, 0.2), 1e-12);
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const double u = uncertainty_measure(k, obs, random_state(5, seed));
            EXPECT_GE(u, 0.0);
            EXPECT_LE(u, top + 1e-12);
        }
    }
}

TEST(UncertaintyMeasure, AngleAtOneHalf) {
    const double d[] = {0.5, 0.5};
    EXPECT_NEAR(uncertainty_measure(MetricKind::Angle, computational2(),
                                    DensityMatrix(ComplexMatrix::diagonal(d))),
                std::numbers::pi / 4, 1e-15);
}

TEST(CheckUr, CertaintyCaseIsTight) {
    const URReport r = check_ur(MetricKind::Angle, computational2(), hadamard(),
                                eigenstate(computational2(), 0));
    EXPECT_NEAR(r.u_a, 0.0, 1e-15);
    EXPECT_NEAR(r.u_b, std::numbers::pi / 4, 1e-15);
    EXPECT_NEAR(r.bound, std::acos(1.0 / std::sqrt(2.0)), 1e-15);
    EXPECT_NEAR(r.slack, 0.0, 1e-12);
    EXPECT_FALSE(r.violates(1e-9));
}

TEST(CheckUr, SharedEigenvectorGivesZeroBound) {
    const auto a = sample_observable(4, 12);
    for (MetricKind k : kAllMetricKinds) {
        const URReport r = check_ur(k, a, a, random_state(4, 5));
        EXPECT_NEAR(r.overlap_c, 1.0, 1e-12);
        EXPECT_NEAR(r.bound, 0.0, 1e-7);
        EXPECT_GE(r.slack, 0.0);
    }
}

TEST(CheckUr, ReportFieldsAreConsistent) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n = 2 + seed % 7;
        const auto a = sample_observable(n, seed);
        const auto b = sample_observable(n, seed + 1);
        const auto rho = random_state(n, seed + 2);
        for (MetricKind k : kAllMetricKinds) {
            const URReport r = check_ur(k, a, b, rho);
            EXPECT_DOUBLE_EQ(r.u_a, f_of(k, r.p_max_a));
            EXPECT_DOUBLE_EQ(r.u_b, f_of(k, r.p_max_b));
            EXPECT_DOUBLE_EQ(r.bound, f_of(k, r.overlap_c * r.overlap_c));
            EXPECT_DOUBLE_EQ(r.slack, r.u_a + r.u_b - r.bound);
            EXPECT_GE(r.slack, -1e-9);
        }
    }
}

TEST(CheckUr, RootInfidelityFormAndBuresHalvedForm) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto a = sample_observable(3, seed);
        const auto b = sample_observable(3, seed + 9);
        const auto rho = random_state(3, seed + 4);

        const URReport ri = check_ur(MetricKind::RootInfidelity, a, b, rho);
        EXPECT_NEAR(ri.slack,
                    std::sqrt(1 - ri.p_max_a) + std::sqrt(1 - ri.p_max_b) -
                        std::sqrt(1 - ri.overlap_c * ri.overlap_c),
                    1e-14);

        const URReport bu = check_ur(MetricKind::Bures, a, b, rho);
        const BuresHalvedForm half = bures_halved_form(bu);
        EXPECT_NEAR(half.slack(), bu.slack / std::sqrt(2.0), 1e-14);
        EXPECT_GE(half.slack(), -1e-9);
    }
}

TEST(CheckUr, ComplementaryObservablesForceMaximalIgnorance) {
    for (std::size_t n = 2; n <= 10; ++n) {
        const auto comp = ProjectiveObservable::computational(n);
        const auto four = ProjectiveObservable::fourier(n);
        const double c = overlap(comp, four);
        EXPECT_NEAR(c, 1.0 / std::sqrt(static_cast<double>(n)), 1e-12);
        for (std::size_t i = 0; i < n; ++i) {
            const double pb = max_probability(four, eigenstate(comp, i)).value;
            EXPECT_LE(pb, c * c + 1e-9);
            EXPECT_NEAR(pb, 1.0 / n, 1e-12);
        }
    }
}

TEST(CheckUr, CustomMetricObeysRelation) {
    const auto metric = FidelityMetric::custom("one-minus", [](double x) { return 1.0 - x; });
    const URReport r = check_ur(metric, computational2(), hadamard(), eigenstate(computational2(), 0));
    EXPECT_NEAR(r.u_b, 0.5, 1e-15);
    EXPECT_NEAR(r.bound, 0.5, 1e-15);
}

TEST(CheckUr, DimensionMismatch) {
    EXPECT_THROW((void)check_ur(MetricKind::Angle, computational2(), ProjectiveObservable::fourier(3),
                                DensityMatrix::maximally_mixed(2)),
                 Error);
    EXPECT_THROW((void)check_ur(MetricKind::Angle, computational2(), hadamard(),
                                DensityMatrix::maximally_mixed(3)),
                 Error);
}

TEST(CheckUr, ViolationIsReportedNotThrown) {
    // Probabilities above what any state allows for this overlap.
    const URReport r = ur_from_probabilities(MetricKind::Angle, 1.0, 1.0, 1.0 / std::sqrt(2.0));
    EXPECT_TRUE(r.violates(1e-9));
    EXPECT_LT(r.slack, 0.0);
}
