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
// Per-antenna projected gradient ascent of the legitimate channel power
// ||h_b||^2 over the planar transmit region. Maximizing ||h_b||^2 is what
// makes the downstream secure design cheap: with maximum-ratio transmission
// the power needed to hit Bob's SNR target shrinks as ||h_b||^2 grows,
// which frees budget for artificial noise.

#pragma once

#include <cstdint>
#include <vector>

#include "masec/channel.hpp"

namespace masec {

// Settings of the backtracking gradient ascent. Step sizes are calibrated
// for positions measured in wavelengths on the unit-path-loss objective;
// optimize_positions rescales them internally, so the defaults work for any
// wavelength and path loss.
struct GradientConfig {
    int max_iterations = 30;        // outer sweeps over all antennas
    double initial_step = 10.0;     // first step size tried per antenna
    double min_step = 1e-3;         // abandon the antenna's move below this
    double convergence_tol = 1e-6;  // relative objective change per sweep

    // Throws std::invalid_argument on non-positive fields or
    // min_step > initial_step.
    void validate() const;
};

// Checkpoints of one run: entry 0 is the initial state, entry k the state
// after outer sweep k. The objective sequence is non-decreasing and every
// snapshot satisfies the layout constraints.
struct OptimizationTrace {
    std::vector<double> objective;           // ||h_b||^2 at each checkpoint
    std::vector<std::vector<Vec2>> layouts;  // positions at each checkpoint
    AntennaLayout final_layout;
    int iterations_used = 0;
    bool converged = false;
};

// Total received power ||h_b||^2 = sum_n |h_b(t_n)|^2 of one layout.
[[nodiscard]] double channel_power(const PathSet &paths_b, const AntennaLayout &layout);

// Analytic gradient of |h_b(t)|^2 with respect to the antenna position t:
//
//   grad = -(2*pi*mu / (lambda*L)) * sum_{l != m} |sigma_l sigma_m|
//          * sin((2*pi/lambda) * t.(rho_l - rho_m) + arg(sigma_m) - arg(sigma_l))
//          * (rho_l - rho_m)
//
// Exactly zero for a single path (the power is position-independent).
[[nodiscard]] Vec2 objective_gradient(const PathSet &paths_b, Vec2 position) noexcept;

// True when moving antenna `antenna_index` to `candidate` keeps it inside
// the region and at least min_distance away from every other antenna.
// Boundary and exact spacing both count as feasible.
[[nodiscard]] bool feasible(Vec2 candidate, const AntennaLayout &layout, std::size_t antenna_index) noexcept;

// Cyclic per-antenna ascent: each antenna takes the steepest-ascent
// direction with a halving line search, a step is accepted only if it is
// feasible and strictly improves that antenna's power, and the run stops
// when a full sweep changes ||h_b||^2 by less than convergence_tol
// (relative) or after max_iterations sweeps.
[[nodiscard]] OptimizationTrace optimize_positions(const PathSet &paths_b, const AntennaLayout &initial,
                                                   const GradientConfig &cfg);

// Random initial layout by rejection sampling: positions drawn uniformly in
// the square, redrawn until the spacing constraint holds. Throws
// PackingInfeasible once 100000 candidates have been rejected in total.
[[nodiscard]] AntennaLayout initialize_layout(std::uint64_t seed, int num_antennas, double region_size,
                                              double min_distance);

}  // namespace masec
