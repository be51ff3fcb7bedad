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
//
// Monte-Carlo experiment harness. Each trial draws both links, optimizes
// the movable-antenna layout on the legitimate link only, builds the secure
// design for it and for a fixed half-wavelength comparison array, and
// records the resulting secrecy rates. Sweeps repeat the same trials while
// varying either the SNR target or the region size; trial seeds depend only
// on (base_seed, trial index), so the fixed-array results are identical
// across the points of a region sweep.
//
// All geometry in the configuration is expressed in carrier wavelengths;
// the harness instantiates the physics at lambda = 1, which loses nothing
// because every computed quantity depends on lengths only through their
// ratio to the wavelength.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "masec/channel.hpp"
#include "masec/optimizer2d.hpp"

namespace masec {

enum class OptimizerKind { gradient2d, bsum1d };
enum class SweepAxis { gamma, region_size };

[[nodiscard]] const char *to_string(OptimizerKind kind) noexcept;
[[nodiscard]] const char *to_string(SweepAxis axis) noexcept;

// One experiment description; mirrors the JSON configuration one to one.
// gamma_db and region_sizes hold one entry for single-point runs and the
// swept grid otherwise.
struct ExperimentConfig {
    int num_antennas = 4;                     // "N"
    int num_paths_bob = 4;                    // "L_b"
    int num_paths_eve = 4;                    // "L_e"
    std::vector<double> region_sizes = {4.0};  // "A_over_lambda"
    double min_distance = 0.5;                // "D_over_lambda"
    std::vector<double> gamma_db = {10.0};    // "gamma_db", SNR target
    double power_ratio = 10.0;                // "P_over_sigma_db"
    bool power_ratio_in_db = true;            // "power_ratio_scale": "db" | "linear"
    double path_loss_db = -110.0;             // "path_loss_db"
    double noise_density_dbm_hz = -174.0;     // "N0_dbm_per_hz"
    double bandwidth_hz = 1e6;                // "bandwidth_hz"
    double eve_noise_offset_db = 0.0;         // "sigma_e_over_sigma_b_db"
    int trials = 200;                         // "trials"
    std::uint64_t base_seed = 1;              // "base_seed"
    OptimizerKind optimizer = OptimizerKind::gradient2d;  // "optimizer"
    GradientConfig gradient;                  // "max_iterations", "initial_step",
                                              // "min_step", "convergence_tol"

    // Derived physical quantities.
    [[nodiscard]] double noise_power_bob() const;   // sigma_b^2 = N0 * B, watts
    [[nodiscard]] double noise_power_eve() const;   // sigma_b^2 shifted by the offset
    [[nodiscard]] double path_gain() const;         // mu, linear
    // Transmit budget: the configured ratio counts signal-to-noise at the
    // receiver, so the average channel gain is divided back out:
    // P = ratio * sigma_b^2 / mu.
    [[nodiscard]] double total_power() const;

    // Throws ConfigError on out-of-range values or unsorted sweep grids.
    void validate() const;
};

// Parses a JSON object with exactly the keys listed above; every key is
// optional, unknown keys are an error. Throws ConfigError.
[[nodiscard]] ExperimentConfig parse_config(const std::string &json_text);
[[nodiscard]] ExperimentConfig load_config(const std::filesystem::path &path);

// Fixed comparison array: N antennas on the x-axis spaced exactly half a
// wavelength apart, centered on the origin.
[[nodiscard]] AntennaLayout fpa_baseline_layout(int num_antennas, double wavelength);

// Everything recorded about one trial. An infeasible scheme (SNR target
// above the budget) transmits nothing and scores secrecy rate 0.
struct TrialRecord {
    std::uint64_t seed = 0;          // the trial's derived seed
    std::vector<Vec2> ma_positions;  // optimized layout
    double ma_channel_power = 0.0;
    double fpa_channel_power = 0.0;
    double ma_signal_power = 0.0;    // minimum power meeting the SNR target
    double fpa_signal_power = 0.0;
    bool ma_feasible = false;
    bool fpa_feasible = false;
    double ma_secrecy_rate = 0.0;
    double fpa_secrecy_rate = 0.0;
    double ma_correlation = 0.0;     // rho between the two links
    double fpa_correlation = 0.0;
    int iterations_used = 0;
};

// Runs one trial of a single-point configuration (one gamma, one region
// size; throws std::invalid_argument otherwise). The trial seed is
// base_seed XOR trial_index, spread into three sub-streams: 0 legitimate
// paths, 1 eavesdropper paths, 2 layout initialization.
[[nodiscard]] TrialRecord run_trial(const ExperimentConfig &cfg, std::uint64_t trial_index);

struct SummaryRow {
    double axis_value = 0.0;
    double ma_mean = 0.0;
    double ma_std = 0.0;    // sample standard deviation
    double fpa_mean = 0.0;
    double fpa_std = 0.0;
    double infeasible_frac = 0.0;  // movable-antenna scheme
};

struct SweepResult {
    SweepAxis axis = SweepAxis::gamma;
    std::vector<double> axis_values;
    std::vector<std::vector<TrialRecord>> trials;  // per axis value, in trial order
    std::vector<SummaryRow> summary;
};

// Repeats cfg.trials trials at every grid point of the chosen axis; the
// other axis must hold a single value. Secrecy rates of infeasible trials
// enter the means as 0.
[[nodiscard]] SweepResult sweep(const ExperimentConfig &cfg, SweepAxis axis);

struct ConvergenceReport {
    std::vector<std::uint64_t> seeds;
    std::vector<std::vector<double>> objective;  // per seed: ||h_b||^2 per iteration
};

// Objective traces of the planar optimizer over cfg.trials seeds at a
// single-point configuration. Requires optimizer == gradient2d.
[[nodiscard]] ConvergenceReport convergence_report(const ExperimentConfig &cfg);

// CSV renderings. All floating-point fields carry 12 significant digits;
// the output is a pure function of the inputs so repeated runs are
// byte-identical. Column names sit in the leading header line.
[[nodiscard]] std::string trials_csv(const SweepResult &result);
[[nodiscard]] std::string summary_csv(const SweepResult &result);
[[nodiscard]] std::string trace_csv(const ConvergenceReport &report);

// 12-significant-digit, locale-independent rendering used by the CSV
// writers (shortest round-trip form of printf "%.12g").
[[nodiscard]] std::string format_csv_double(double value);

void write_file(const std::filesystem::path &path, const std::string &content);

}  // namespace masec
