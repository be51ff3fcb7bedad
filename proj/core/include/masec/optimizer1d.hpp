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
// Block-coordinate surrogate optimization for a linear movable-antenna
// array. For one antenna on the x-axis the channel power is a constant
// minus a weighted sum of sinusoids of its coordinate; each sinusoid is
// replaced by its tangent convex quadratic upper bound, and the bound sum
// is minimized exactly over the antenna's one-dimensional feasible set.
// Lowering the bound can only lower the sinusoid sum, so every block update
// raises the channel power (a majorize-minimize step per coordinate).

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "masec/channel.hpp"

namespace masec {

// Convex tangent bound a*(x - b)^2 + c of one sinusoid.
struct QuadraticSurrogate {
    double curvature = 0.0;  // a, always >= 0
    double vertex = 0.0;     // b
    double offset = 0.0;     // c

    [[nodiscard]] double value(double x) const noexcept {
        const double d = x - vertex;
        return curvature * d * d + offset;
    }
};

// Tangent quadratic upper bound of sin(rho*x + theta) at x0:
// equal value and slope at x0, curvature rho^2/2, and
// surrogate(x) >= sin(rho*x + theta) for every x.
// rho == 0 degenerates to the constant sin(theta).
[[nodiscard]] QuadraticSurrogate build_surrogate(double rho, double theta, double x0) noexcept;

struct WeightedSurrogate {
    double weight = 1.0;  // nonnegative
    QuadraticSurrogate surrogate;
};

// Feasible set of one coordinate: [-half_width, half_width] minus the open
// interval of radius min_distance around each blocked coordinate.
struct BoxWithExclusions {
    double half_width = 0.0;
    double min_distance = 0.0;
    std::vector<double> blocked;

    [[nodiscard]] bool contains(double x) const noexcept;
};

// Exact minimizer of sum_i weight_i * surrogate_i over the feasible set.
// The minimum sits at the unconstrained vertex or at a boundary point of
// the feasible set, so only finitely many candidates exist; ties go to the
// smallest x. Throws ConstraintViolation when the feasible set is empty.
[[nodiscard]] double minimize_quadratic_1d(std::span<const WeightedSurrogate> terms,
                                           const BoxWithExclusions &feasible);

// N antenna coordinates on a segment of length A centered at the origin,
// pairwise at least min_distance apart. Immutable after construction; the
// constructor throws ConstraintViolation on a violation
// (std::invalid_argument on an empty list or negative A or D).
class LinearLayout {
  public:
    LinearLayout(std::vector<double> coordinates, double region_size, double min_distance);

    [[nodiscard]] std::size_t size() const noexcept { return coordinates_.size(); }
    [[nodiscard]] double coordinate(std::size_t n) const noexcept { return coordinates_[n]; }
    [[nodiscard]] const std::vector<double> &coordinates() const noexcept { return coordinates_; }
    [[nodiscard]] double region_size() const noexcept { return region_size_; }
    [[nodiscard]] double half_width() const noexcept { return 0.5 * region_size_; }
    [[nodiscard]] double min_distance() const noexcept { return min_distance_; }

    // Embedding into the plane at y = 0, with the same region and spacing.
    [[nodiscard]] AntennaLayout as_layout_2d() const;

  private:
    std::vector<double> coordinates_;
    double region_size_;
    double min_distance_;
};

// ||h_b||^2 of a linear layout; identical to channel_power of the y = 0
// embedding.
[[nodiscard]] double linear_channel_power(const PathSet &paths_b, const LinearLayout &layout);

// Checkpoints of one run, same layout as OptimizationTrace: entry 0 is the
// initial state, entry k the state after sweep k.
struct LinearTrace {
    std::vector<double> objective;  // ||h_b||^2 at each checkpoint
    LinearLayout final_layout;
    int iterations_used = 0;
    bool converged = false;
};

// Cyclic per-antenna surrogate descent. Each sweep rebuilds the cross-term
// surrogates of one antenna at its current coordinate, minimizes their sum
// exactly over the antenna's feasible interval set and accepts the result
// (guarded against roundoff regressions of the true power). Stops when a
// sweep changes ||h_b||^2 by less than `tol` (relative) or after
// `max_outer` sweeps.
[[nodiscard]] LinearTrace optimize_linear(const PathSet &paths_b, const LinearLayout &initial,
                                          int max_outer, double tol);

// Random initial coordinates by rejection sampling on the segment, same
// budget and failure behavior as the planar initializer.
[[nodiscard]] LinearLayout initialize_linear_layout(std::uint64_t seed, int num_antennas,
                                                    double region_size, double min_distance);

}  // namespace masec
