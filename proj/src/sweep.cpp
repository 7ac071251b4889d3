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

#include "geomur/sweep.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <thread>
#include <tuple>

#include "geomur/error.hpp"
#include "geomur/random.hpp"
#include "geomur/serialization.hpp"
#include "geomur/uncertainty.hpp"

namespace geomur {

using nlohmann::json;

std::string_view to_string(Mixedness m) noexcept {
    switch (m) {
    case Mixedness::Pure:
        return "pure";
    case Mixedness::Mixed:
        return "mixed";
    case Mixedness::Both:
        return "both";
    }
    return "unknown";
}

std::optional<Mixedness> parse_mixedness(std::string_view name) noexcept {
    for (Mixedness m : {Mixedness::Pure, Mixedness::Mixed, Mixedness::Both})
        if (to_string(m) == name)
            return m;
    return std::nullopt;
}

void SweepConfig::validate() const {
    if (dims.empty())
        throw Error(ErrorCode::DomainError, "sweep needs at least one dimension");
    for (std::size_t d : dims)
        if (d < 2)
            throw Error(ErrorCode::DomainError, "sweep dimensions must be >= 2");
    if (trials_per_dim == 0)
        throw Error(ErrorCode::DomainError, "trials per dimension must be >= 1");
    if (kinds.empty())
        throw Error(ErrorCode::DomainError, "sweep needs at least one metric");
    if (!(tolerance > 0.0))
        throw Error(ErrorCode::DomainError, "tolerance must be positive");
}

json to_json(const SweepConfig &config) {
    json kinds = json::array();
    for (MetricKind k : config.kinds)
        kinds.push_back(std::string(to_string(k)));
    return {{"dims", config.dims},
            {"trials_per_dim", config.trials_per_dim},
            {"seed", config.seed},
            {"kinds", std::move(kinds)},
            {"mixedness", std::string(to_string(config.mixedness))},
            {"tolerance", config.tolerance}};
}

SweepConfig sweep_config_from_json(const json &j) {
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, "sweep config must be a JSON object");
    SweepConfig c;
    try {
        if (j.contains("dims"))
            c.dims = j["dims"].get<std::vector<std::size_t>>();
        if (j.contains("trials_per_dim"))
            c.trials_per_dim = j["trials_per_dim"].get<std::size_t>();
        if (j.contains("seed"))
            c.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("tolerance"))
            c.tolerance = j["tolerance"].get<double>();
        if (j.contains("kinds")) {
            c.kinds.clear();
            for (const auto &name : j["kinds"]) {
                const auto kind = parse_metric_kind(name.get<std::string>());
                if (!kind)
                    throw Error(ErrorCode::ParseError, "unknown metric " + name.dump());
                c.kinds.push_back(*kind);
            }
        }
        if (j.contains("mixedness")) {
            const auto m = parse_mixedness(j["mixedness"].get<std::string>());
            if (!m)
                throw Error(ErrorCode::ParseError, "unknown mixedness " + j["mixedness"].dump());
            c.mixedness = *m;
        }
    } catch (const json::exception &e) {
        throw Error(ErrorCode::ParseError, std::string("sweep config: ") + e.what());
    }
    return c;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t dim, std::size_t trial) noexcept {
    return derive_seed(seed, (static_cast<std::uint64_t>(dim) << 32) + trial);
}

SweepTrial make_trial(std::uint64_t seed, std::size_t dim, std::size_t trial, Mixedness mixedness) {
    const std::uint64_t ts = trial_seed(seed, dim, trial);
    const bool pure =
        mixedness == Mixedness::Pure || (mixedness == Mixedness::Both && trial % 2 == 0);
    const std::size_t aux = pure ? 1 : 2 + static_cast<std::size_t>(splitmix64(ts) % (2 * dim - 1));
    return SweepTrial{dim,
                      trial,
                      ts,
                      aux,
                      sample_mixed(dim, aux, derive_seed(ts, 0)),
                      sample_observable(dim, derive_seed(ts, 1)),
                      sample_observable(dim, derive_seed(ts, 2))};
}

namespace {

struct Partial {
    std::size_t violations = 0;
    std::vector<std::size_t> kind_violations;
    std::vector<double> kind_min;
    double min_slack = std::numeric_limits<double>::infinity();
    // (dim position, trial, kind position) of the current minimum.
    std::tuple<std::size_t, std::size_t, std::size_t> key{};
    bool has_min = false;

    explicit Partial(std::size_t kinds)
        : kind_violations(kinds, 0), kind_min(kinds, std::numeric_limits<double>::infinity()) {}

    void offer(double slack, std::tuple<std::size_t, std::size_t, std::size_t> at) {
        if (!has_min || slack < min_slack || (slack == min_slack && at < key)) {
            min_slack = slack;
            key = at;
            has_min = true;
        }
    }

    void merge(const Partial &other) {
        violations += other.violations;
        for (std::size_t k = 0; k < kind_min.size(); ++k) {
            kind_violations[k] += other.kind_violations[k];
            kind_min[k] = std::min(kind_min[k], other.kind_min[k]);
        }
        if (other.has_min)
            offer(other.min_slack, other.key);
    }
};

} // namespace

SweepResult run_sweep(const SweepConfig &config, unsigned workers, const SweepProgress &progress) {
    config.validate();
    workers = std::max(1U, workers);
    const std::size_t per_dim = config.trials_per_dim;
    const std::size_t total = config.dims.size() * per_dim;
    const std::size_t n_kinds = config.kinds.size();
    const Tolerances tol{};

    std::mutex progress_mutex;
    std::size_t done = 0;
    const std::size_t report_every = std::max<std::size_t>(1, total / 100);

    auto work = [&](unsigned worker, Partial &out) {
        for (std::size_t job = worker; job < total; job += workers) {
            const std::size_t dim_pos = job / per_dim;
            const std::size_t trial = job % per_dim;
            const SweepTrial t = make_trial(config.seed, config.dims[dim_pos], trial, config.mixedness);
            const double pa = max_probability(t.a, t.rho, tol).value;
            const double pb = max_probability(t.b, t.rho, tol).value;
            const double c = overlap(t.a, t.b);
            for (std::size_t k = 0; k < n_kinds; ++k) {
                const double slack = ur_from_probabilities(config.kinds[k], pa, pb, c, tol).slack;
                if (slack < -config.tolerance) {
                    ++out.violations;
                    ++out.kind_violations[k];
                }
                out.kind_min[k] = std::min(out.kind_min[k], slack);
                out.offer(slack, {dim_pos, trial, k});
            }
            if (progress) {
                std::lock_guard lock(progress_mutex);
                if (++done % report_every == 0 || done == total)
                    progress(done, total);
            }
        }
    };

    std::vector<Partial> partials(workers, Partial(n_kinds));
    if (workers == 1) {
        work(0, partials[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, w, std::ref(partials[w]));
        for (auto &th : pool)
            th.join();
    }

    Partial all(n_kinds);
    for (const auto &p : partials)
        all.merge(p);

    SweepResult r;
    r.total_trials = total * n_kinds;
    r.violations = all.violations;
    r.min_slack = all.min_slack;
    const auto [dim_pos, trial, kind_pos] = all.key;
    r.min_slack_witness = {config.dims[dim_pos], trial, config.kinds[kind_pos], all.min_slack};
    for (std::size_t k = 0; k < n_kinds; ++k)
        r.per_kind.push_back({config.kinds[k], total, all.kind_violations[k], all.kind_min[k]});
    return r;
}

json to_json(const SweepResult &result, const SweepConfig &config) {
    const SweepWitness &w = result.min_slack_witness;
    const SweepTrial t = make_trial(config.seed, w.dim, w.trial, config.mixedness);
    json per_kind = json::object();
    for (const auto &k : result.per_kind)
        per_kind[std::string(to_string(k.kind))] = {
            {"trials", k.trials}, {"violations", k.violations}, {"min_slack", k.min_slack}};
    return {{"config", to_json(config)},
            {"total_trials", result.total_trials},
            {"violations", result.violations},
            {"min_slack", result.min_slack},
            {"per_kind", std::move(per_kind)},
            {"min_slack_witness",
             {{"kind", std::string(to_string(w.kind))},
              {"dim", w.dim},
              {"trial", w.trial},
              {"seed", t.trial_seed},
              {"aux_dim", t.aux_dim},
              {"slack", w.slack},
              {"rho", to_json(t.rho)},
              {"a", to_json(t.a)},
              {"b", to_json(t.b)}}}};
}

} // namespace geomur
