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

#include "masec/optimizer1d.hpp"

#include <algorithm>
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
constexpr double half_pi = 0.5 * std::numbers::pi;
constexpr long k_max_rejections = 100000;
}  // namespace

QuadraticSurrogate build_surrogate(double rho, double theta, double x0) noexcept {
    if (rho == 0.0)
        return {0.0, x0, std::sin(theta)};
    const double y0 = rho * x0 + theta;
    const double c0 = std::cos(y0);
    // Tangent parabola of sin at y0, pulled back through y = rho*x + theta:
    // curvature rho^2/2 >= |sin''|/2 * rho^2 bounds the remainder globally.
    return {0.5 * rho * rho, x0 - c0 / rho, std::sin(y0) - 0.5 * c0 * c0};
}

bool BoxWithExclusions::contains(double x) const noexcept {
    if (std::abs(x) > half_width)
        return false;
    for (double c : blocked)
        if (std::abs(x - c) < min_distance)
            return false;
    return true;
}

double minimize_quadratic_1d(std::span<const WeightedSurrogate> terms,
                             const BoxWithExclusions &feasible) {
    // The weighted sum is a parabola (or a line/constant when the total
    // curvature vanishes); its constrained minimum over a union of closed
    // intervals is attained at the vertex or at an interval endpoint. All
    // endpoints are box edges or exclusion-zone edges.
    std::vector<double> candidates;
    candidates.reserve(2 * feasible.blocked.size() + 3);
    candidates.push_back(-feasible.half_width);
    candidates.push_back(feasible.half_width);
    // c +- D can round a fraction of an ulp into the open exclusion zone and
    // then fail its own membership test; step outward onto the closed
    // boundary so the true endpoint stays a candidate.
    auto push_edge = [&candidates](double c, double d, bool left) {
        const double inf = std::numeric_limits<double>::infinity();
        double x = left ? c - d : c + d;
        for (int guard = 0; guard < 4 && std::abs(x - c) < d; ++guard)
            x = std::nextafter(x, left ? -inf : inf);
        candidates.push_back(x);
    };
    for (double c : feasible.blocked) {
        push_edge(c, feasible.min_distance, true);
        push_edge(c, feasible.min_distance, false);
    }

    double curvature_total = 0.0;
    double weighted_vertex = 0.0;
    for (const WeightedSurrogate &t : terms) {
        curvature_total += t.weight * t.surrogate.curvature;
        weighted_vertex += t.weight * t.surrogate.curvature * t.surrogate.vertex;
    }
    if (curvature_total > 0.0)
        candidates.push_back(weighted_vertex / curvature_total);

    auto objective = [&terms](double x) {
        double sum = 0.0;
        for (const WeightedSurrogate &t : terms)
            sum += t.weight * t.surrogate.value(x);
        return sum;
    };

    // Ascending order plus strict comparison resolves value ties toward the
    // smallest x.
    std::sort(candidates.begin(), candidates.end());
    bool found = false;
    double best_x = 0.0;
    double best_value = std::numeric_limits<double>::infinity();
    for (double x : candidates) {
        if (!feasible.contains(x))
            continue;
        const double v = objective(x);
        if (!found || v < best_value) {
            found = true;
            best_x = x;
            best_value = v;
        }
    }
    if (!found)
        throw ConstraintViolation("minimize_quadratic_1d: empty feasible set");
    return best_x;
}

LinearLayout::LinearLayout(std::vector<double> coordinates, double region_size, double min_distance)
    : coordinates_(std::move(coordinates)), region_size_(region_size), min_distance_(min_distance) {
    if (coordinates_.empty())
        throw std::invalid_argument("LinearLayout: at least one antenna required");
    if (region_size_ < 0.0 || min_distance_ < 0.0)
        throw std::invalid_argument("LinearLayout: region size and spacing must be nonnegative");

    const double half = 0.5 * region_size_;
    for (double x : coordinates_)
        if (std::abs(x) > half)
            throw ConstraintViolation("LinearLayout: coordinate outside the transmit segment");
    for (std::size_t n = 0; n + 1 < coordinates_.size(); ++n)
        for (std::size_t m = n + 1; m < coordinates_.size(); ++m)
            if (std::abs(coordinates_[n] - coordinates_[m]) < min_distance_)
                throw ConstraintViolation("LinearLayout: antennas closer than the minimum distance");
}

AntennaLayout LinearLayout::as_layout_2d() const {
    std::vector<Vec2> pos(coordinates_.size());
    for (std::size_t n = 0; n < coordinates_.size(); ++n)
        pos[n] = {coordinates_[n], 0.0};
    return AntennaLayout(std::move(pos), region_size_, min_distance_);
}

double linear_channel_power(const PathSet &paths_b, const LinearLayout &layout) {
    double total = 0.0;
    for (std::size_t n = 0; n < layout.size(); ++n)
        total += std::norm(evaluate_channel(paths_b, {layout.coordinate(n), 0.0}));
    return total;
}

LinearTrace optimize_linear(const PathSet &paths_b, const LinearLayout &initial, int max_outer,
                            double tol) {
    if (max_outer < 1)
        throw std::invalid_argument("optimize_linear: max_outer must be at least 1");
    if (!(tol > 0.0))
        throw std::invalid_argument("optimize_linear: tol must be positive");

    const std::size_t n_ant = initial.size();
    const std::size_t L = paths_b.num_paths();
    const double k = two_pi / paths_b.wavelength();

    std::vector<double> xs = initial.coordinates();
    auto antenna_power = [&paths_b](double x) {
        return std::norm(evaluate_channel(paths_b, {x, 0.0}));
    };
    std::vector<double> f_cur(n_ant);
    for (std::size_t n = 0; n < n_ant; ++n)
        f_cur[n] = antenna_power(xs[n]);

    auto total_power = [&f_cur]() {
        double sum = 0.0;
        for (double f : f_cur)
            sum += f;
        return sum;
    };

    LinearTrace trace{{total_power()}, initial, 0, false};
    double previous = trace.objective.front();

    std::vector<WeightedSurrogate> terms;
    terms.reserve(L * (L - 1));
    BoxWithExclusions fs{initial.half_width(), initial.min_distance(), {}};
    fs.blocked.resize(n_ant > 0 ? n_ant - 1 : 0);

    for (int sweep = 0; sweep < max_outer; ++sweep) {
        for (std::size_t n = 0; n < n_ant; ++n) {
            if (L < 2)
                continue;  // single path: the power does not depend on x

            // |h(x)|^2 = const - sum over ordered path pairs of
            // |sigma_l sigma_m| * sin(rho_lm * x + theta_lm - pi/2); each
            // sinusoid gets its tangent upper bound at the current x.
            terms.clear();
            const double x0 = xs[n];
            for (std::size_t l = 0; l < L; ++l) {
                for (std::size_t m = 0; m < L; ++m) {
                    if (m == l)
                        continue;
                    const double rho_lm = k * (paths_b.rho(l).x - paths_b.rho(m).x);
                    const double theta_lm =
                        paths_b.gain_phase(m) - paths_b.gain_phase(l) - half_pi;
                    terms.push_back({paths_b.gain_magnitude(l) * paths_b.gain_magnitude(m),
                                     build_surrogate(rho_lm, theta_lm, x0)});
                }
            }

            std::size_t j = 0;
            for (std::size_t m = 0; m < n_ant; ++m)
                if (m != n)
                    fs.blocked[j++] = xs[m];

            const double x_new = minimize_quadratic_1d(terms, fs);
            const double f_new = antenna_power(x_new);
            // The bound construction guarantees f_new >= f_cur analytically;
            // the guard only filters sub-ulp regressions.
            if (f_new >= f_cur[n]) {
                xs[n] = x_new;
                f_cur[n] = f_new;
            }
        }
        ++trace.iterations_used;
        const double current = total_power();
        trace.objective.push_back(current);
        const double denom = std::max(previous, std::numeric_limits<double>::min());
        if ((current - previous) / denom < tol) {
            trace.converged = true;
            break;
        }
        previous = current;
    }

    trace.final_layout = LinearLayout(std::move(xs), initial.region_size(), initial.min_distance());
    return trace;
}

LinearLayout initialize_linear_layout(std::uint64_t seed, int num_antennas, double region_size,
                                      double min_distance) {
    if (num_antennas < 1)
        throw std::invalid_argument("initialize_linear_layout: need at least one antenna");
    if (region_size < 0.0 || min_distance < 0.0)
        throw std::invalid_argument(
            "initialize_linear_layout: region size and spacing must be nonnegative");

    Rng rng(seed);
    const double half = 0.5 * region_size;
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(num_antennas));
    long rejections = 0;
    while (xs.size() < static_cast<std::size_t>(num_antennas)) {
        const double candidate = rng.uniform(-half, half);
        bool ok = true;
        for (double x : xs) {
            if (std::abs(candidate - x) < min_distance) {
                ok = false;
                break;
            }
        }
        if (ok) {
            xs.push_back(candidate);
        } else if (++rejections > k_max_rejections) {
            throw PackingInfeasible("initialize_linear_layout: could not place " +
                                    std::to_string(num_antennas) + " antennas at spacing " +
                                    std::to_string(min_distance) + " on a segment of length " +
                                    std::to_string(region_size));
        }
    }
    return LinearLayout(std::move(xs), region_size, min_distance);
}

}  // namespace masec
