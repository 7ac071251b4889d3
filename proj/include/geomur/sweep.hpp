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
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "geomur/metrics.hpp"
#include "geomur/states.hpp"

namespace geomur {

enum class Mixedness { Pure, Mixed, Both };

std::string_view to_string(Mixedness m) noexcept;
std::optional<Mixedness> parse_mixedness(std::string_view name) noexcept;

struct SweepConfig {
    std::vector<std::size_t> dims{2};
    std::size_t trials_per_dim = 1000;
    std::uint64_t seed = 0;
    std::vector<MetricKind> kinds{MetricKind::Angle};
    Mixedness mixedness = Mixedness::Both;
    double tolerance = 1e-9;

    /// Throws DomainError on empty lists, dims < 2, zero trials or
    /// non-positive tolerance.
    void validate() const;
};

nlohmann::json to_json(const SweepConfig &config);
/// Missing fields keep their defaults.
SweepConfig sweep_config_from_json(const nlohmann::json &j);

/**
 * One sampled (rho, A, B) triple. Seeds:
 *   trial_seed = seed XOR splitmix64(dim * 2^32 + trial)
 *   rho <- derive_seed(trial_seed, 0), A <- derive_seed(trial_seed, 1),
 *   B <- derive_seed(trial_seed, 2)
 * rho is the reduced state of a Haar pure state on dim * aux_dim. Pure
 * trials use aux_dim = 1; mixed trials use
 * aux_dim = 2 + splitmix64(trial_seed) mod (2 dim - 1), i.e. 2..2 dim.
 * Mixedness::Both alternates pure (even trial) and mixed (odd trial).
 */
struct SweepTrial {
    std::size_t dim;
    std::size_t trial;
    std::uint64_t trial_seed;
    std::size_t aux_dim;
    DensityMatrix rho;
    ProjectiveObservable a;
    ProjectiveObservable b;
};

std::uint64_t trial_seed(std::uint64_t seed, std::size_t dim, std::size_t trial) noexcept;
SweepTrial make_trial(std::uint64_t seed, std::size_t dim, std::size_t trial, Mixedness mixedness);

struct SweepWitness {
    std::size_t dim = 0;
    std::size_t trial = 0;
    MetricKind kind = MetricKind::Angle;
    double slack = 0.0;

    friend bool operator==(const SweepWitness &, const SweepWitness &) = default;
};

struct KindSummary {
    MetricKind kind = MetricKind::Angle;
    std::size_t trials = 0;
    std::size_t violations = 0;
    double min_slack = 0.0;

    friend bool operator==(const KindSummary &, const KindSummary &) = default;
};

struct SweepResult {
    /// Number of (triple, metric) evaluations.
    std::size_t total_trials = 0;
    std::size_t violations = 0;
    double min_slack = 0.0;
    SweepWitness min_slack_witness;
    std::vector<KindSummary> per_kind;

    friend bool operator==(const SweepResult &, const SweepResult &) = default;
};

using SweepProgress = std::function<void(std::size_t done, std::size_t total)>;

/**
 * Evaluates every configured metric on every trial. With workers > 1 the
 * trials are dealt round-robin to threads; the result is identical to the
 * sequential run because seeds depend only on (dim, trial) and the merge
 * keeps the smallest slack with ties broken by (dim position, trial, kind
 * position).
 */
SweepResult run_sweep(const SweepConfig &config, unsigned workers = 1,
                      const SweepProgress &progress = {});

/// Result plus the witness triple regenerated from its seed.
nlohmann::json to_json(const SweepResult &result, const SweepConfig &config);

} // namespace geomur
