// SPDX-License-Identifier: Apache-2.0
//
// masec - movable-antenna aided secure transmission
// Copyright (C) 2026 masec contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "masec/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "masec/errors.hpp"
#include "masec/optimizer1d.hpp"
#include "masec/rng.hpp"
#include "masec/security.hpp"

namespace masec {

namespace {

// The configuration is wavelength-relative, so the harness can pick the
// length unit freely; lambda = 1 keeps the numbers readable.
constexpr double k_wavelength = 1.0;

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

struct SchemeOutcome {
    double channel_power = 0.0;
    double signal_power = 0.0;
    bool feasible = false;
    double secrecy_rate = 0.0;
    double correlation = 0.0;
};

SchemeOutcome evaluate_scheme(const PathSet &paths_b, const PathSet &paths_e,
                              const AntennaLayout &layout, double gamma, double total_power,
                              double sigma_b2, double sigma_e2) {
    const ChannelRealization real = assemble_channel(paths_b, paths_e, layout, sigma_b2, sigma_e2);
    SchemeOutcome out;
    for (std::size_t n = 0; n < real.h_b.n_elem; ++n)
        out.channel_power += std::norm(real.h_b(n));
    out.signal_power = min_signal_power(real.h_b, gamma, sigma_b2);
    out.feasible = out.signal_power <= total_power;
    if (out.feasible) {
        const SecureDesign design = make_secure_design(real.h_b, gamma, total_power, sigma_b2);
        out.secrecy_rate = secrecy_rate_simulated(real, design);
    }
    out.correlation = channel_correlation(real.h_b, real.h_e);
    return out;
}

double single_value(const std::vector<double> &values, const char *what) {
    if (values.size() != 1)
        throw std::invalid_argument(std::string("run_trial: ") + what +
                                    " must hold a single value here");
    return values.front();
}

struct TrialSeeds {
    std::uint64_t trial;
    std::uint64_t paths_bob;
    std::uint64_t paths_eve;
    std::uint64_t layout;
};

TrialSeeds derive_trial_seeds(std::uint64_t base_seed, std::uint64_t trial_index) {
    TrialSeeds s{};
    s.trial = base_seed ^ trial_index;
    std::uint64_t state = s.trial;
    s.paths_bob = splitmix64_next(state);
    s.paths_eve = splitmix64_next(state);
    s.layout = splitmix64_next(state);
    return s;
}

void accumulate_summary(SummaryRow &row, const std::vector<TrialRecord> &records) {
    const auto n = static_cast<double>(records.size());
    double ma_sum = 0.0;
    double fpa_sum = 0.0;
    double infeasible = 0.0;
    for (const TrialRecord &r : records) {
        ma_sum += r.ma_secrecy_rate;
        fpa_sum += r.fpa_secrecy_rate;
        if (!r.ma_feasible)
            infeasible += 1.0;
    }
    row.ma_mean = ma_sum / n;
    row.fpa_mean = fpa_sum / n;
    row.infeasible_frac = infeasible / n;

    double ma_ss = 0.0;
    double fpa_ss = 0.0;
    for (const TrialRecord &r : records) {
        ma_ss += (r.ma_secrecy_rate - row.ma_mean) * (r.ma_secrecy_rate - row.ma_mean);
        fpa_ss += (r.fpa_secrecy_rate - row.fpa_mean) * (r.fpa_secrecy_rate - row.fpa_mean);
    }
    row.ma_std = records.size() > 1 ? std::sqrt(ma_ss / (n - 1.0)) : 0.0;
    row.fpa_std = records.size() > 1 ? std::sqrt(fpa_ss / (n - 1.0)) : 0.0;
}

}  // namespace

const char *to_string(OptimizerKind kind) noexcept {
    return kind == OptimizerKind::gradient2d ? "gradient2d" : "bsum1d";
}

const char *to_string(SweepAxis axis) noexcept {
    return axis == SweepAxis::gamma ? "gamma_db" : "A_over_lambda";
}

double ExperimentConfig::noise_power_bob() const {
    return dbm_to_watt(noise_density_dbm_hz) * bandwidth_hz;
}

double ExperimentConfig::noise_power_eve() const {
    return noise_power_bob() * db_to_linear(eve_noise_offset_db);
}

double ExperimentConfig::path_gain() const { return db_to_linear(path_loss_db); }

double ExperimentConfig::total_power() const {
    const double ratio = power_ratio_in_db ? db_to_linear(power_ratio) : power_ratio;
    return ratio * noise_power_bob() / path_gain();
}

void ExperimentConfig::validate() const {
    if (num_antennas < 1)
        throw ConfigError("config: N must be at least 1");
    if (num_paths_bob < 1 || num_paths_eve < 1)
        throw ConfigError("config: L_b and L_e must be at least 1");
    if (region_sizes.empty())
        throw ConfigError("config: A_over_lambda must hold at least one value");
    for (double a : region_sizes)
        if (!(a > 0.0))
            throw ConfigError("config: A_over_lambda values must be positive");
    for (std::size_t i = 0; i + 1 < region_sizes.size(); ++i)
        if (!(region_sizes[i] < region_sizes[i + 1]))
            throw ConfigError("config: A_over_lambda sweep must be strictly increasing");
    if (min_distance < 0.0)
        throw ConfigError("config: D_over_lambda must be nonnegative");
    if (gamma_db.empty())
        throw ConfigError("config: gamma_db must hold at least one value");
    for (std::size_t i = 0; i + 1 < gamma_db.size(); ++i)
        if (!(gamma_db[i] < gamma_db[i + 1]))
            throw ConfigError("config: gamma_db sweep must be strictly increasing");
    if (!power_ratio_in_db && !(power_ratio > 0.0))
        throw ConfigError("config: a linear P_over_sigma_db ratio must be positive");
    if (!(bandwidth_hz > 0.0))
        throw ConfigError("config: bandwidth_hz must be positive");
    if (trials < 1)
        throw ConfigError("config: trials must be at least 1");
    try {
        gradient.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

AntennaLayout fpa_baseline_layout(int num_antennas, double wavelength) {
    if (num_antennas < 1)
        throw std::invalid_argument("fpa_baseline_layout: need at least one antenna");
    if (!(wavelength > 0.0))
        throw std::invalid_argument("fpa_baseline_layout: wavelength must be positive");
    const double spacing = 0.5 * wavelength;
    const double center = 0.5 * static_cast<double>(num_antennas - 1);
    std::vector<Vec2> pos(static_cast<std::size_t>(num_antennas));
    for (int n = 0; n < num_antennas; ++n)
        pos[static_cast<std::size_t>(n)] = {(static_cast<double>(n) - center) * spacing, 0.0};
    const double region = static_cast<double>(std::max(num_antennas - 1, 1)) * spacing;
    return AntennaLayout(std::move(pos), region, spacing);
}

TrialRecord run_trial(const ExperimentConfig &cfg, std::uint64_t trial_index) {
    cfg.validate();
    const double gamma = db_to_linear(single_value(cfg.gamma_db, "gamma_db"));
    const double region = single_value(cfg.region_sizes, "A_over_lambda") * k_wavelength;
    const double min_dist = cfg.min_distance * k_wavelength;
    const double sigma_b2 = cfg.noise_power_bob();
    const double sigma_e2 = cfg.noise_power_eve();
    const double total_power = cfg.total_power();

    const TrialSeeds seeds = derive_trial_seeds(cfg.base_seed, trial_index);
    const PathSet paths_b =
        sample_path_set(seeds.paths_bob, cfg.num_paths_bob, cfg.path_loss_db, k_wavelength);
    const PathSet paths_e =
        sample_path_set(seeds.paths_eve, cfg.num_paths_eve, cfg.path_loss_db, k_wavelength);

    TrialRecord rec;
    rec.seed = seeds.trial;

    if (cfg.optimizer == OptimizerKind::gradient2d) {
        const AntennaLayout initial =
            initialize_layout(seeds.layout, cfg.num_antennas, region, min_dist);
        OptimizationTrace trace = optimize_positions(paths_b, initial, cfg.gradient);
        rec.ma_positions = trace.final_layout.positions();
        rec.iterations_used = trace.iterations_used;
        const SchemeOutcome ma = evaluate_scheme(paths_b, paths_e, trace.final_layout, gamma,
                                                 total_power, sigma_b2, sigma_e2);
        rec.ma_channel_power = ma.channel_power;
        rec.ma_signal_power = ma.signal_power;
        rec.ma_feasible = ma.feasible;
        rec.ma_secrecy_rate = ma.secrecy_rate;
        rec.ma_correlation = ma.correlation;
    } else {
        const LinearLayout initial =
            initialize_linear_layout(seeds.layout, cfg.num_antennas, region, min_dist);
        LinearTrace trace = optimize_linear(paths_b, initial, cfg.gradient.max_iterations,
                                            cfg.gradient.convergence_tol);
        const AntennaLayout embedded = trace.final_layout.as_layout_2d();
        rec.ma_positions = embedded.positions();
        rec.iterations_used = trace.iterations_used;
        const SchemeOutcome ma =
            evaluate_scheme(paths_b, paths_e, embedded, gamma, total_power, sigma_b2, sigma_e2);
        rec.ma_channel_power = ma.channel_power;
        rec.ma_signal_power = ma.signal_power;
        rec.ma_feasible = ma.feasible;
        rec.ma_secrecy_rate = ma.secrecy_rate;
        rec.ma_correlation = ma.correlation;
    }

    const AntennaLayout fpa = fpa_baseline_layout(cfg.num_antennas, k_wavelength);
    const SchemeOutcome fp =
        evaluate_scheme(paths_b, paths_e, fpa, gamma, total_power, sigma_b2, sigma_e2);
    rec.fpa_channel_power = fp.channel_power;
    rec.fpa_signal_power = fp.signal_power;
    rec.fpa_feasible = fp.feasible;
    rec.fpa_secrecy_rate = fp.secrecy_rate;
    rec.fpa_correlation = fp.correlation;
    return rec;
}

SweepResult sweep(const ExperimentConfig &cfg, SweepAxis axis) {
    cfg.validate();
    const std::vector<double> &grid =
        axis == SweepAxis::gamma ? cfg.gamma_db : cfg.region_sizes;
    const std::vector<double> &other =
        axis == SweepAxis::gamma ? cfg.region_sizes : cfg.gamma_db;
    if (other.size() != 1)
        throw std::invalid_argument("sweep: the axis not being swept must hold a single value");

    SweepResult result;
    result.axis = axis;
    result.axis_values = grid;
    result.trials.reserve(grid.size());
    result.summary.reserve(grid.size());
    for (double value : grid) {
        ExperimentConfig point = cfg;
        if (axis == SweepAxis::gamma)
            point.gamma_db = {value};
        else
            point.region_sizes = {value};
        std::vector<TrialRecord> records;
        records.reserve(static_cast<std::size_t>(cfg.trials));
        for (int t = 0; t < cfg.trials; ++t)
            records.push_back(run_trial(point, static_cast<std::uint64_t>(t)));
        SummaryRow row;
        row.axis_value = value;
        accumulate_summary(row, records);
        result.trials.push_back(std::move(records));
        result.summary.push_back(row);
    }
    return result;
}

ConvergenceReport convergence_report(const ExperimentConfig &cfg) {
    cfg.validate();
    if (cfg.optimizer != OptimizerKind::gradient2d)
        throw std::invalid_argument("convergence_report: requires the gradient2d optimizer");
    const double region = single_value(cfg.region_sizes, "A_over_lambda") * k_wavelength;
    (void)single_value(cfg.gamma_db, "gamma_db");
    const double min_dist = cfg.min_distance * k_wavelength;

    ConvergenceReport report;
    report.seeds.reserve(static_cast<std::size_t>(cfg.trials));
    report.objective.reserve(static_cast<std::size_t>(cfg.trials));
    for (int t = 0; t < cfg.trials; ++t) {
        // Same seed derivation as run_trial, so trace k describes trial k.
        const TrialSeeds seeds = derive_trial_seeds(cfg.base_seed, static_cast<std::uint64_t>(t));
        const PathSet paths_b =
            sample_path_set(seeds.paths_bob, cfg.num_paths_bob, cfg.path_loss_db, k_wavelength);
        const AntennaLayout initial =
            initialize_layout(seeds.layout, cfg.num_antennas, region, min_dist);
        OptimizationTrace trace = optimize_positions(paths_b, initial, cfg.gradient);
        report.seeds.push_back(seeds.trial);
        report.objective.push_back(std::move(trace.objective));
    }
    return report;
}

}  // namespace masec
