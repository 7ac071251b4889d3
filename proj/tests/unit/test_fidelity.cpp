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

#include <gtest/gtest.h>

#include "geomur/error.hpp"
#include "geomur/fidelity.hpp"
#include "geomur/uncertainty.hpp"
#include "test_support.hpp"

using namespace geomur;
using geomur::testing::random_state;

namespace {

DensityMatrix diag2(double a, double b) {
    const double d[] = {a, b};
    return DensityMatrix(ComplexMatrix::diagonal(d));
}

DensityMatrix ket0() { return DensityMatrix::from_pure(PureState::basis(2, 0)); }
DensityMatrix ket1() { return DensityMatrix::from_pure(PureState::basis(2, 1)); }

// Classical fidelity of commuting states: (sum_i sqrt(p_i q_i))^2.
double classical_fidelity(std::initializer_list<double> p, std::initializer_list<double> q) {
    double s = 0.0;
    auto it = q.begin();
    for (double pi : p)
        s += std::sqrt(pi * *it++);
    return s * s;
}

} // namespace

TEST(Fidelity, SelfFidelityIsOne) {
    for (std::size_t n = 2; n <= 8; ++n)
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const DensityMatrix rho = random_state(n, seed * 31 + n);
            EXPECT_NEAR(fidelity(rho, rho), 1.0, 1e-10);
            EXPECT_NEAR(fidelity_oracle(rho, rho), 1.0, 1e-10);
        }
}

TEST(Fidelity, OrthogonalPureStates) {
    EXPECT_NEAR(fidelity(ket0(), ket1()), 0.0, 1e-15);
    EXPECT_NEAR(fidelity_oracle(ket0(), ket1()), 0.0, 1e-15);
}

TEST(Fidelity, CommutingStatesMatchClassicalFidelity) {
    const double expected = classical_fidelity({0.6, 0.4}, {0.5, 0.5});
    EXPECT_NEAR(expected, 0.9898979485566356, 1e-15);
    EXPECT_NEAR(fidelity(diag2(0.6, 0.4), diag2(0.5, 0.5)), expected, 1e-12);
    EXPECT_NEAR(fidelity_oracle(diag2(0.6, 0.4), diag2(0.5, 0.5)), expected, 1e-12);
}

TEST(Fidelity, MaximallyMixedPair) {
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto m = DensityMatrix::maximally_mixed(n);
        EXPECT_NEAR(fidelity_oracle(m, m), 1.0, 1e-12);
    }
}

TEST(Fidelity, TwoPathsAgreeOnRandomPairs) {
    for (std::size_t n = 2; n <= 8; ++n)
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            const DensityMatrix rho = random_state(n, 2 * seed);
            const DensityMatrix sigma = random_state(n, 2 * seed + 1);
            EXPECT_NEAR(fidelity(rho, sigma), fidelity_oracle(rho, sigma), 1e-9)
                << "n=" << n << " seed=" << seed;
        }
}

TEST(Fidelity, NormalizedAndSymmetric) {
    for (std::size_t n = 2; n <= 10; ++n)
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const DensityMatrix rho = random_state(n, 5 * seed + 1);
            const DensityMatrix sigma = random_state(n, 5 * seed + 2);
            const double f = fidelity(rho, sigma);
            EXPECT_GE(f, 0.0);
            EXPECT_LE(f, 1.0);
            EXPECT_NEAR(f, fidelity(sigma, rho), 1e-10);
        }
}

TEST(Fidelity, NearlyEqualStatesHaveFidelityNearOne) {
    // Identity of indiscernibles, forward direction, on perturbations small
    // enough that F = 1 within 1e-9 and the states agree to 1e-6.
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const DensityMatrix rho = sample_mixed(n, 2 * n, seed);
            const DensityMatrix other = sample_mixed(n, 2 * n, seed + 100);
            const double eps = 1e-7;
            const DensityMatrix sigma((1.0 - eps) * rho.matrix() + eps * other.matrix());
            const double f = fidelity(rho, sigma);
            ASSERT_NEAR(f, 1.0, 1e-9);
            EXPECT_LT(max_abs_diff(rho.matrix(), sigma.matrix()), 1e-6);
        }
}

TEST(Fidelity, DimensionMismatch) {
    try {
        (void)fidelity(ket0(), DensityMatrix::maximally_mixed(3));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
    EXPECT_THROW((void)fidelity_oracle(ket0(), DensityMatrix::maximally_mixed(3)), Error);
}

TEST(FidelityPure, Overlaps) {
    const PureState zero = PureState::basis(2, 0);
    const PureState one = PureState::basis(2, 1);
    const PureState plus = PureState::normalized({1.0, 1.0});
    EXPECT_DOUBLE_EQ(fidelity_pure_pure(zero, zero), 1.0);
    EXPECT_DOUBLE_EQ(fidelity_pure_pure(zero, one), 0.0);
    EXPECT_NEAR(fidelity_pure_pure(zero, plus), 0.5, 1e-15);
}

TEST(FidelityPure, PureMixedExamples) {
    const PureState zero = PureState::basis(2, 0);
    EXPECT_NEAR(fidelity_pure_mixed(zero, DensityMatrix::maximally_mixed(2)), 0.5, 1e-15);
    EXPECT_NEAR(fidelity_pure_mixed(zero, ket0()), 1.0, 1e-15);
}

TEST(FidelityPure, AllPathsAgreeWithPureArgument) {
    for (std::size_t n = 2; n <= 8; ++n)
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const PureState psi = sample_pure(n, seed);
            const DensityMatrix sigma = random_state(n, seed + 500);
            const DensityMatrix rho = DensityMatrix::from_pure(psi);
            const double direct = fidelity_pure_mixed(psi, sigma);
            EXPECT_NEAR(direct, fidelity(rho, sigma), 1e-9);
            EXPECT_NEAR(direct, fidelity_oracle(rho, sigma), 1e-9);
            EXPECT_NEAR(direct, mat_trace(mat_mul(rho.matrix(), sigma.matrix())).real(), 1e-12);

            const PureState phi = sample_pure(n, seed + 900);
            EXPECT_NEAR(fidelity_pure_pure(psi, phi),
                        fidelity(rho, DensityMatrix::from_pure(phi)), 1e-9);
        }
}

TEST(FidelityPure, ProjectorFidelityIsOutcomeProbability) {
    for (std::size_t n = 2; n <= 8; ++n)
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const ProjectiveObservable obs = sample_observable(n, seed);
            const DensityMatrix rho = random_state(n, seed + 40);
            const auto p = outcome_probabilities(obs, rho);
            for (std::size_t i = 0; i < n; ++i) {
                const DensityMatrix proj = projector(obs, i);
                EXPECT_NEAR(fidelity(proj, rho), p[i], 1e-10);
                EXPECT_NEAR(mat_trace(mat_mul(proj.matrix(), rho.matrix())).real(), p[i], 1e-10);
            }
        }
}

TEST(PurificationSearch, EqualPureStatesGiveOne) {
    const DensityMatrix rho = DensityMatrix::from_pure(sample_pure(3, 4));
    EXPECT_NEAR(purification_overlap_search(rho, rho, 1, 0), 1.0, 1e-12);
    EXPECT_NEAR(purification_overlap_search(rho, rho, 10, 9), 1.0, 1e-12);
}

TEST(PurificationSearch, NeverExceedsFidelity) {
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const DensityMatrix rho = random_state(n, 3 * seed);
            const DensityMatrix sigma = random_state(n, 3 * seed + 1);
            EXPECT_LE(purification_overlap_search(rho, sigma, 50, seed), fidelity(rho, sigma) + 1e-9);
        }
}

TEST(PurificationSearch, ApproachesFidelityForQubits) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const DensityMatrix rho = sample_mixed(2, 2, seed);
        const DensityMatrix sigma = sample_mixed(2, 2, seed + 50);
        const double f = fidelity(rho, sigma);
        const double found = purification_overlap_search(rho, sigma, 2000, seed);
        EXPECT_GE(found, f - 0.05);
        EXPECT_LE(found, f + 1e-9);
    }
}

TEST(PurificationSearch, RequiresTrials) {
    EXPECT_THROW((void)purification_overlap_search(ket0(), ket1(), 0, 1), Error);
}
