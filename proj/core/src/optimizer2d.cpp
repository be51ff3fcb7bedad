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

#include "masec/optimizer2d.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "masec/errors.hpp"
#include "masec/rng.hpp"

namespace masec {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr long k_max_rejections = 100000;

// Shared feasibility predicate: inside the closed square and at least
// min_distance from every position except the one being moved. Used both
// for the public check and for the optimizer's working state, so accepted
// steps and layout validation agree bit for bit.
bool feasible_impl(Vec2 candidate, const std::vector<Vec2> &positions, std::size_t skip,
                   double half_width, double min_distance) noexcept {
    if (std::abs(candidate.x) > half_width || std::abs(candidate.y) > half_width)
        return false;
    for (std::size_t m = 0; m < positions.size(); ++m) {
        if (m == skip)
            continue;
        if (distance(candidate, positions[m]) < min_distance)
            return false;
    }
    return true;
}

}  // namespace

void GradientConfig::validate() const {
    if (max_iterations < 1)
        throw std::invalid_argument("GradientConfig: max_iterations must be at least 1");
    if (!(initial_step > 0.0) || !(min_step > 0.0))
        throw std::invalid_argument("GradientConfig: step sizes must be positive");
    if (min_step > initial_step)
        throw std::invalid_argument("GradientConfig: min_step must not exceed initial_step");
    if (!(convergence_tol > 0.0))
        throw std::invalid_argument("GradientConfig: convergence_tol must be positive");
}

double channel_power(const PathSet &paths_b, const AntennaLayout &layout) {
    double total = 0.0;
    for (std::size_t n = 0; n < layout.size(); ++n)
        total += std::norm(evaluate_channel(paths_b, layout.position(n)));
    return total;
}

Vec2 objective_gradient(const PathSet &paths_b, Vec2 position) noexcept {
    const std::size_t L = paths_b.num_paths();
    const double k = two_pi / paths_b.wavelength();
    double gx = 0.0;
    double gy = 0.0;
    for (std::size_t l = 0; l < L; ++l) {
        for (std::size_t m = 0; m < L; ++m) {
            if (m == l)
                continue;
            const Vec2 rd = paths_b.rho(l) - paths_b.rho(m);
            const double arg =
                k * dot(position, rd) + paths_b.gain_phase(m) - paths_b.gain_phase(l);
            const double s = paths_b.gain_magnitude(l) * paths_b.gain_magnitude(m) * std::sin(arg);
            gx += s * rd.x;
            gy += s * rd.y;
        }
    }
    const double coef =
        -(two_pi * paths_b.path_loss()) / (paths_b.wavelength() * static_cast<double>(L));
    return {coef * gx, coef * gy};
}

bool feasible(Vec2 candidate, const AntennaLayout &layout, std::size_t antenna_index) noexcept {
    return feasible_impl(candidate, layout.positions(), antenna_index, 0.5 * layout.region_size(),
                         layout.min_distance());
}

OptimizationTrace optimize_positions(const PathSet &paths_b, const AntennaLayout &initial,
                                     const GradientConfig &cfg) {
    cfg.validate();
    const std::size_t n_ant = initial.size();
    const double half_width = 0.5 * initial.region_size();
    const double min_dist = initial.min_distance();
    const double lambda = paths_b.wavelength();

    // The step sizes in cfg assume wavelength units and a unit-path-loss
    // objective; the physical gradient carries a mu / (lambda * L) scale, so
    // one constant maps the configured steps onto physical displacements.
    const double step_scale =
        lambda * lambda * static_cast<double>(paths_b.num_paths()) / paths_b.path_loss();

    std::vector<Vec2> pos = initial.positions();
    std::vector<double> f_cur(n_ant);
    for (std::size_t n = 0; n < n_ant; ++n)
        f_cur[n] = std::norm(evaluate_channel(paths_b, pos[n]));

    auto total_power = [&f_cur]() {
        double sum = 0.0;
        for (double f : f_cur)
            sum += f;
        return sum;
    };

    OptimizationTrace trace{{total_power()}, {pos}, initial, 0, false};
    double previous = trace.objective.front();

    for (int sweep = 0; sweep < cfg.max_iterations; ++sweep) {
        for (std::size_t n = 0; n < n_ant; ++n) {
            const Vec2 g = objective_gradient(paths_b, pos[n]);
            double u = cfg.initial_step;
            while (true) {
                const Vec2 candidate = pos[n] + (u * step_scale) * g;
                u *= 0.5;
                if (feasible_impl(candidate, pos, n, half_width, min_dist)) {
                    const double f_cand = std::norm(evaluate_channel(paths_b, candidate));
                    if (f_cand > f_cur[n]) {
                        pos[n] = candidate;
                        f_cur[n] = f_cand;
                        break;
                    }
                }
                if (u < cfg.min_step)
                    break;  // no feasible improving step found; antenna stays
            }
        }
        ++trace.iterations_used;
        const double current = total_power();
        trace.objective.push_back(current);
        trace.layouts.push_back(pos);
        const double denom = std::max(previous, std::numeric_limits<double>::min());
        if ((current - previous) / denom < cfg.convergence_tol) {
            trace.converged = true;
            break;
        }
        previous = current;
    }

    trace.final_layout = AntennaLayout(std::move(pos), initial.region_size(), min_dist);
    return trace;
}

AntennaLayout initialize_layout(std::uint64_t seed, int num_antennas, double region_size,
                                double min_distance) {
    if (num_antennas < 1)
        throw std::invalid_argument("initialize_layout: need at least one antenna");
    if (region_size < 0.0 || min_distance < 0.0)
        throw std::invalid_argument("initialize_layout: region size and spacing must be nonnegative");

    Rng rng(seed);
    const double half = 0.5 * region_size;
    std::vector<Vec2> pos;
    pos.reserve(static_cast<std::size_t>(num_antennas));
    long rejections = 0;
    while (pos.size() < static_cast<std::size_t>(num_antennas)) {
        const Vec2 candidate{rng.uniform(-half, half), rng.uniform(-half, half)};
        bool ok = true;
        for (const Vec2 &p : pos) {
            if (distance(candidate, p) < min_distance) {
                ok = false;
                break;
            }
        }
        if (ok) {
            pos.push_back(candidate);
        } else if (++rejections > k_max_rejections) {
            throw PackingInfeasible("initialize_layout: could not place " +
                                    std::to_string(num_antennas) + " antennas at spacing " +
                                    std::to_string(min_distance) + " in a square of side " +
                                    std::to_string(region_size));
        }
    }
    return AntennaLayout(std::move(pos), region_size, min_distance);
}

}  // namespace masec
