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

// geomur: fidelity, uncertainty-relation checks, Monte Carlo sweeps and
// feasibility-region export.
//
// Exit codes: 0 success, 2 usage or input error, 3 uncertainty relation
// violated (a finding, not an input error).

#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "geomur/domains.hpp"
#include "geomur/error.hpp"
#include "geomur/fidelity.hpp"
#include "geomur/format.hpp"
#include "geomur/metrics.hpp"
#include "geomur/serialization.hpp"
#include "geomur/sweep.hpp"
#include "geomur/uncertainty.hpp"

namespace {

using namespace geomur;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitViolation = 3;

MetricKind metric_or_throw(const std::string &name) {
    const auto kind = parse_metric_kind(name);
    if (!kind)
        throw Error(ErrorCode::ParseError,
                    "unknown metric '" + name + "' (expected angle, bures or root-infidelity)");
    return *kind;
}

// Accepts a plain number or sqrt(x).
double parse_overlap(const std::string &text) {
    std::string body = text;
    bool root = false;
    if (body.rfind("sqrt(", 0) == 0 && body.size() > 6 && body.back() == ')') {
        body = body.substr(5, body.size() - 6);
        root = true;
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(body, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != body.size())
        throw Error(ErrorCode::ParseError, "cannot parse overlap '" + text + "'");
    return root ? std::sqrt(value) : value;
}

int cmd_fidelity(const std::string &rho_path, const std::string &sigma_path) {
    const DensityMatrix rho = density_matrix_from_json(read_json_file(rho_path));
    const DensityMatrix sigma = density_matrix_from_json(read_json_file(sigma_path));
    const double f = fidelity(rho, sigma);
    std::cout << "F    = " << format_significant(f) << '\n'
              << "d_A  = " << format_significant(f_of(MetricKind::Angle, f)) << '\n'
              << "d_B  = " << format_significant(f_of(MetricKind::Bures, f)) << '\n'
              << "d_RI = " << format_significant(f_of(MetricKind::RootInfidelity, f)) << '\n';
    return kExitOk;
}

int cmd_check_ur(const std::string &rho_path, const std::string &a_path,
                 const std::string &b_path, const std::string &metric, double tolerance) {
    const MetricKind kind = metric_or_throw(metric);
    const DensityMatrix rho = density_matrix_from_json(read_json_file(rho_path));
    const ProjectiveObservable a = observable_from_json(read_json_file(a_path));
    const ProjectiveObservable b = observable_from_json(read_json_file(b_path));
    const URReport report = check_ur(kind, a, b, rho);
    std::cout << to_json(report).dump(2) << '\n';
    if (report.violates(tolerance)) {
        std::cerr << "uncertainty relation violated: slack " << format_shortest(report.slack)
                  << '\n';
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_sweep(SweepConfig config, unsigned workers, bool quiet) {
    config.validate();
    SweepProgress progress;
    if (!quiet)
        progress = [](std::size_t done, std::size_t total) {
            std::cerr << "\rsweep: " << done << '/' << total << (done == total ? "\n" : "")
                      << std::flush;
        };
    const SweepResult result = run_sweep(config, workers, progress);
    std::cout << to_json(result, config).dump(2) << '\n';
    return result.violations == 0 ? kExitOk : kExitViolation;
}

int cmd_region(const std::string &metric, const std::string &overlap_text, std::size_t dim,
               std::size_t points, const std::string &out) {
    const DomainSpec spec{metric_or_throw(metric), parse_overlap(overlap_text), dim};
    const auto samples = region_samples(spec, points);

    std::filesystem::path path(out);
    if (std::filesystem::is_directory(path))
        path /= region_filename(spec.kind, spec.overlap_c);
    const bool as_json = path.extension() == ".json";
    write_text_file(path.string(),
                    as_json ? region_to_json(spec, samples) : region_to_csv(samples));
    std::cout << path.string() << '\n';
    return kExitOk;
}

int cmd_sample(const std::string &what, std::size_t dim, std::size_t aux_dim, std::uint64_t seed,
               const std::string &out) {
    nlohmann::json doc;
    if (what == "pure")
        doc = to_json(sample_pure(dim, seed));
    else if (what == "mixed")
        doc = to_json(sample_mixed(dim, aux_dim, seed));
    else if (what == "observable")
        doc = to_json(sample_observable(dim, seed));
    else
        throw Error(ErrorCode::ParseError, "sample kind must be pure, mixed or observable");
    const std::string text = doc.dump(2) + "\n";
    if (out.empty() || out == "-")
        std::cout << text;
    else {
        write_text_file(out, text);
        std::cout << out << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Fidelity-based uncertainty relations: compute, check and sweep"};
    app.require_subcommand(1);

    // fidelity
    std::string rho_path, sigma_path;
    auto *fid = app.add_subcommand("fidelity", "Print F, d_A, d_B, d_RI for two state files");
    fid->add_option("rho", rho_path, "First state (JSON)")->required()->check(CLI::ExistingFile);
    fid->add_option("sigma", sigma_path, "Second state (JSON)")->required()->check(CLI::ExistingFile);

    // check-ur
    std::string ur_rho, ur_a, ur_b, ur_metric = "angle";
    double ur_tolerance = 1e-9;
    auto *chk = app.add_subcommand("check-ur", "Evaluate U(A) + U(B) >= f(c^2) for one state");
    chk->add_option("rho", ur_rho, "State (JSON)")->required()->check(CLI::ExistingFile);
    chk->add_option("a", ur_a, "Observable A (JSON)")->required()->check(CLI::ExistingFile);
    chk->add_option("b", ur_b, "Observable B (JSON)")->required()->check(CLI::ExistingFile);
    chk->add_option("--metric", ur_metric, "angle | bures | root-infidelity")->capture_default_str();
    chk->add_option("--tolerance", ur_tolerance, "Violation threshold on the slack")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    // sweep
    std::string config_path, sw_mixedness;
    std::vector<std::size_t> sw_dims;
    std::vector<std::string> sw_metrics;
    std::size_t sw_trials = 0;
    std::uint64_t sw_seed = 0;
    double sw_tolerance = 1e-9;
    unsigned sw_workers = 1;
    bool sw_quiet = false;
    auto *sweep = app.add_subcommand("sweep", "Monte Carlo check of the uncertainty relations");
    sweep->add_option("--config", config_path, "JSON SweepConfig; flags override its fields")
        ->check(CLI::ExistingFile);
    auto *o_dim = sweep->add_option("--dim", sw_dims, "Dimensions (repeat or comma-separate)")
                      ->delimiter(',');
    auto *o_trials = sweep->add_option("--trials", sw_trials, "Trials per dimension");
    auto *o_seed = sweep->add_option("--seed", sw_seed, "Base seed");
    auto *o_metric = sweep->add_option("--metric", sw_metrics, "Metrics (repeat or comma-separate)")
                         ->delimiter(',');
    auto *o_mix = sweep->add_option("--mixedness", sw_mixedness, "pure | mixed | both");
    auto *o_tol = sweep->add_option("--tolerance", sw_tolerance, "Violation threshold");
    sweep->add_option("--workers", sw_workers, "Worker threads (0 = hardware concurrency)")
        ->capture_default_str();
    sweep->add_flag("--quiet", sw_quiet, "No progress on stderr");

    // region
    std::string rg_metric = "angle", rg_overlap, rg_out = ".";
    std::size_t rg_dim = 20, rg_points = 1001;
    auto *region = app.add_subcommand("region", "Write boundary samples of a feasibility region");
    region->add_option("--metric", rg_metric, "angle | bures | root-infidelity")->capture_default_str();
    region->add_option("--overlap", rg_overlap, "Overlap c: a number or sqrt(x)")->required();
    region->add_option("--dim", rg_dim, "Hilbert space dimension N")->capture_default_str();
    region->add_option("--points", rg_points, "Number of grid points")->capture_default_str();
    region->add_option("--out", rg_out, "Output file (.csv or .json) or directory")
        ->capture_default_str();

    // sample
    std::string sm_what, sm_out;
    std::size_t sm_dim = 2, sm_aux = 2;
    std::uint64_t sm_seed = 0;
    auto *sample = app.add_subcommand("sample", "Write a random state or observable fixture");
    sample->add_option("what", sm_what, "pure | mixed | observable")
        ->required()
        ->check(CLI::IsMember({"pure", "mixed", "observable"}));
    sample->add_option("--dim", sm_dim, "Dimension")->capture_default_str();
    sample->add_option("--aux-dim", sm_aux, "Auxiliary dimension for mixed states")
        ->capture_default_str();
    sample->add_option("--seed", sm_seed, "Seed")->capture_default_str();
    sample->add_option("--out", sm_out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*fid)
            return cmd_fidelity(rho_path, sigma_path);
        if (*chk)
            return cmd_check_ur(ur_rho, ur_a, ur_b, ur_metric, ur_tolerance);
        if (*sweep) {
            SweepConfig config;
            if (!config_path.empty())
                config = sweep_config_from_json(read_json_file(config_path));
            if (o_dim->count())
                config.dims = sw_dims;
            if (o_trials->count())
                config.trials_per_dim = sw_trials;
            if (o_seed->count())
                config.seed = sw_seed;
            if (o_metric->count()) {
                config.kinds.clear();
                for (const auto &m : sw_metrics)
                    config.kinds.push_back(metric_or_throw(m));
            }
            if (o_mix->count()) {
                const auto m = parse_mixedness(sw_mixedness);
                if (!m)
                    throw Error(ErrorCode::ParseError, "mixedness must be pure, mixed or both");
                config.mixedness = *m;
            }
            if (o_tol->count())
                config.tolerance = sw_tolerance;
            const unsigned workers =
                sw_workers == 0 ? std::max(1U, std::thread::hardware_concurrency()) : sw_workers;
            return cmd_sweep(config, workers, sw_quiet);
        }
        if (*region)
            return cmd_region(rg_metric, rg_overlap, rg_dim, rg_points, rg_out);
        if (*sample)
            return cmd_sample(sm_what, sm_dim, sm_aux, sm_seed, sm_out);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
