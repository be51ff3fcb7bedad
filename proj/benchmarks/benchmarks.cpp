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
// Microbenchmarks for the hot paths: channel evaluation, the two position
// optimizers, the secure-design construction and a full Monte-Carlo trial.
// Fixed seeds keep the workloads identical across runs.

#include <benchmark/benchmark.h>

#include <cstdint>

#include <masec/channel.hpp>
#include <masec/experiment.hpp>
#include <masec/optimizer1d.hpp>
#include <masec/optimizer2d.hpp>
#include <masec/rng.hpp>
#include <masec/security.hpp>

namespace {

using namespace masec;

void bm_evaluate_channel(benchmark::State &state) {
    const int n_paths = static_cast<int>(state.range(0));
    const PathSet paths = sample_path_set(1, n_paths, -110.0, 1.0);
    const Vec2 t{0.37, -1.12};
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate_channel(paths, t));
}
BENCHMARK(bm_evaluate_channel)->Arg(2)->Arg(4)->Arg(16);

void bm_assemble_channel(benchmark::State &state) {
    const PathSet pb = sample_path_set(1, 4, -110.0, 1.0);
    const PathSet pe = sample_path_set(2, 4, -110.0, 1.0);
    const AntennaLayout layout = initialize_layout(3, 4, 4.0, 0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble_channel(pb, pe, layout, 4e-15, 4e-15));
}
BENCHMARK(bm_assemble_channel);

void bm_objective_gradient(benchmark::State &state) {
    const int n_paths = static_cast<int>(state.range(0));
    const PathSet paths = sample_path_set(4, n_paths, -110.0, 1.0);
    const Vec2 t{0.21, 0.84};
    for (auto _ : state)
        benchmark::DoNotOptimize(objective_gradient(paths, t));
}
BENCHMARK(bm_objective_gradient)->Arg(2)->Arg(4)->Arg(16);

void bm_optimize_positions(benchmark::State &state) {
    const PathSet paths = sample_path_set(5, 4, -110.0, 1.0);
    const AntennaLayout init = initialize_layout(6, 4, 4.0, 0.5);
    const GradientConfig cfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(optimize_positions(paths, init, cfg));
}
BENCHMARK(bm_optimize_positions);

void bm_optimize_linear(benchmark::State &state) {
    const PathSet paths = sample_path_set(7, 4, -110.0, 1.0);
    const LinearLayout init = initialize_linear_layout(8, 4, 4.0, 0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(optimize_linear(paths, init, 30, 1e-6));
}
BENCHMARK(bm_optimize_linear);

void bm_make_secure_design(benchmark::State &state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(9);
    arma::cx_vec h(n);
    for (std::size_t i = 0; i < n; ++i)
        h(i) = rng.complex_normal();
    const double sigma2 = 0.01;
    const double gamma = 10.0;
    const double budget = 10.0 * min_signal_power(h, gamma, sigma2);
    for (auto _ : state)
        benchmark::DoNotOptimize(make_secure_design(h, gamma, budget, sigma2));
}
BENCHMARK(bm_make_secure_design)->Arg(4)->Arg(16);

void bm_secrecy_rates(benchmark::State &state) {
    Rng rng(10);
    ChannelRealization real;
    real.h_b.set_size(4);
    real.h_e.set_size(4);
    for (std::size_t i = 0; i < 4; ++i) {
        real.h_b(i) = rng.complex_normal();
        real.h_e(i) = rng.complex_normal();
    }
    real.noise_power_b = 0.01;
    real.noise_power_e = 0.01;
    const double gamma = 10.0;
    const double budget = 10.0 * min_signal_power(real.h_b, gamma, real.noise_power_b);
    const SecureDesign design = make_secure_design(real.h_b, gamma, budget, real.noise_power_b);
    for (auto _ : state) {
        benchmark::DoNotOptimize(secrecy_rate_simulated(real, design));
        benchmark::DoNotOptimize(secrecy_rate_closed_form(real.h_b, real.h_e, gamma, budget,
                                                          real.noise_power_b,
                                                          real.noise_power_e));
    }
}
BENCHMARK(bm_secrecy_rates);

void bm_run_trial(benchmark::State &state) {
    ExperimentConfig cfg;
    cfg.trials = 1;
    std::uint64_t index = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trial(cfg, index));
        index = (index + 1) % 64;
    }
}
BENCHMARK(bm_run_trial);

}  // namespace

BENCHMARK_MAIN();
