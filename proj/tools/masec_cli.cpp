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
// Command line front end.
//
//   masec optimize     --config cfg.json [--out dir]
//   masec convergence  --config cfg.json --out dir
//   masec sweep-gamma  --config cfg.json --out dir
//   masec sweep-region --config cfg.json --out dir
//
// Exit codes: 0 success, 2 configuration error, 3 antenna packing
// infeasible, 1 any other failure.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "masec/errors.hpp"
#include "masec/experiment.hpp"

namespace {

namespace fs = std::filesystem;

fs::path prepare_out_dir(const std::string &out) {
    fs::path dir(out);
    fs::create_directories(dir);
    return dir;
}

// Wraps a single trial in the one-point sweep shape the CSV writer expects.
masec::SweepResult single_point_result(const masec::ExperimentConfig &cfg,
                                       masec::TrialRecord record) {
    masec::SweepResult result;
    result.axis = masec::SweepAxis::gamma;
    result.axis_values = {cfg.gamma_db.front()};
    result.trials.push_back({std::move(record)});
    masec::SummaryRow row;
    row.axis_value = cfg.gamma_db.front();
    row.ma_mean = result.trials[0][0].ma_secrecy_rate;
    row.fpa_mean = result.trials[0][0].fpa_secrecy_rate;
    row.infeasible_frac = result.trials[0][0].ma_feasible ? 0.0 : 1.0;
    result.summary.push_back(row);
    return result;
}

int run_optimize(const std::string &config_path, const std::string &out) {
    const masec::ExperimentConfig cfg = masec::load_config(config_path);
    const masec::TrialRecord rec = masec::run_trial(cfg, 0);

    std::printf("optimizer:        %s\n", masec::to_string(cfg.optimizer));
    std::printf("trial seed:       %llu\n", static_cast<unsigned long long>(rec.seed));
    std::printf("iterations used:  %d\n", rec.iterations_used);
    std::printf("channel power:    ma %s   fpa %s\n",
                masec::format_csv_double(rec.ma_channel_power).c_str(),
                masec::format_csv_double(rec.fpa_channel_power).c_str());
    std::printf("signal power:     ma %s   fpa %s\n",
                masec::format_csv_double(rec.ma_signal_power).c_str(),
                masec::format_csv_double(rec.fpa_signal_power).c_str());
    std::printf("feasible:         ma %d   fpa %d\n", rec.ma_feasible ? 1 : 0,
                rec.fpa_feasible ? 1 : 0);
    std::printf("secrecy rate:     ma %s   fpa %s  (bits/s/Hz)\n",
                masec::format_csv_double(rec.ma_secrecy_rate).c_str(),
                masec::format_csv_double(rec.fpa_secrecy_rate).c_str());
    std::printf("link correlation: ma %s   fpa %s\n",
                masec::format_csv_double(rec.ma_correlation).c_str(),
                masec::format_csv_double(rec.fpa_correlation).c_str());
    std::printf("positions (x, y) in wavelengths:\n");
    for (std::size_t n = 0; n < rec.ma_positions.size(); ++n)
        std::printf("  %2zu: %s, %s\n", n, masec::format_csv_double(rec.ma_positions[n].x).c_str(),
                    masec::format_csv_double(rec.ma_positions[n].y).c_str());

    if (!out.empty()) {
        const fs::path dir = prepare_out_dir(out);
        masec::write_file(dir / "trials.csv", masec::trials_csv(single_point_result(cfg, rec)));
    }
    return 0;
}

int run_convergence(const std::string &config_path, const std::string &out) {
    const masec::ExperimentConfig cfg = masec::load_config(config_path);
    const masec::ConvergenceReport report = masec::convergence_report(cfg);
    const fs::path dir = prepare_out_dir(out);
    masec::write_file(dir / "trace.csv", masec::trace_csv(report));
    std::printf("wrote %s (%zu traces)\n", (dir / "trace.csv").string().c_str(),
                report.objective.size());
    return 0;
}

int run_sweep(const std::string &config_path, const std::string &out, masec::SweepAxis axis) {
    const masec::ExperimentConfig cfg = masec::load_config(config_path);
    const masec::SweepResult result = masec::sweep(cfg, axis);
    const fs::path dir = prepare_out_dir(out);
    masec::write_file(dir / "trials.csv", masec::trials_csv(result));
    masec::write_file(dir / "summary.csv", masec::summary_csv(result));
    std::printf("wrote %s and %s (%zu x %d trials)\n", (dir / "trials.csv").string().c_str(),
                (dir / "summary.csv").string().c_str(), result.axis_values.size(), cfg.trials);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"movable-antenna secure transmission experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;

    CLI::App *optimize = app.add_subcommand("optimize", "optimize one trial and print the result");
    optimize->add_option("--config", config_path, "JSON experiment configuration")->required();
    optimize->add_option("--out", out_dir, "directory for trials.csv (optional)");

    CLI::App *convergence =
        app.add_subcommand("convergence", "record optimizer objective traces over many seeds");
    convergence->add_option("--config", config_path, "JSON experiment configuration")->required();
    convergence->add_option("--out", out_dir, "output directory for trace.csv")->required();

    CLI::App *sweep_gamma =
        app.add_subcommand("sweep-gamma", "secrecy rate versus the SNR target grid");
    sweep_gamma->add_option("--config", config_path, "JSON experiment configuration")->required();
    sweep_gamma->add_option("--out", out_dir, "output directory for trials.csv and summary.csv")
        ->required();

    CLI::App *sweep_region =
        app.add_subcommand("sweep-region", "secrecy rate versus the region size grid");
    sweep_region->add_option("--config", config_path, "JSON experiment configuration")->required();
    sweep_region->add_option("--out", out_dir, "output directory for trials.csv and summary.csv")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (optimize->parsed())
            return run_optimize(config_path, out_dir);
        if (convergence->parsed())
            return run_convergence(config_path, out_dir);
        if (sweep_gamma->parsed())
            return run_sweep(config_path, out_dir, masec::SweepAxis::gamma);
        return run_sweep(config_path, out_dir, masec::SweepAxis::region_size);
    } catch (const masec::ConfigError &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const masec::PackingInfeasible &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
