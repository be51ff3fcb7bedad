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

#include <doctest.h>

#include <cmath>
#include <vector>

#include <masec/channel.hpp>
#include <masec/errors.hpp>
#include <masec/optimizer2d.hpp>
#include <masec/rng.hpp>

#include "oracles.hpp"

using namespace masec;
namespace orc = masec::oracles;

TEST_CASE("gradient settings reject out-of-range values") {
    GradientConfig cfg;
    CHECK_NOTHROW(cfg.validate());

    GradientConfig bad = cfg;
    bad.max_iterations = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.initial_step = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.min_step = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.min_step = bad.initial_step * 2.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.convergence_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("layout power equals the antenna-wise oracle sum") {
    const PathSet paths = sample_path_set(7, 6, -110.0, 0.1);
    const AntennaLayout layout({{0.05, 0.01}, {-0.12, 0.08}, {0.0, -0.15}}, 0.4, 0.05);
    const double lib = channel_power(paths, layout);
    const double ref = orc::layout_power(paths, layout.positions());
    CHECK(lib == doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("analytic gradient matches central finite differences") {
    Rng rng(101);
    for (int rep = 0; rep < 60; ++rep) {
        const double lambda = 0.1;
        const PathSet paths = sample_path_set(500 + rep, 2 + rep % 3, -110.0, lambda);
        const std::vector<Vec2> pos{{rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2)}};
        const Vec2 analytic = objective_gradient(paths, pos[0]);
        const Vec2 numeric = orc::fd_gradient(paths, pos, 0, 1e-6 * lambda);
        const double scale = std::max(norm(analytic), norm(numeric));
        REQUIRE(scale > 0.0);
        CHECK(norm(analytic - numeric) / scale <= 1e-5);
    }
}

TEST_CASE("single-path links have an exactly zero gradient") {
    const PathSet paths = sample_path_set(3, 1, -50.0, 0.2);
    Rng rng(4);
    for (int rep = 0; rep < 50; ++rep) {
        const Vec2 g = objective_gradient(paths, {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
        CHECK(g.x == 0.0);
        CHECK(g.y == 0.0);
    }
}

TEST_CASE("move feasibility treats bounds and spacing inclusively") {
    const AntennaLayout layout({{0.0, 0.0}, {1.0, 1.0}}, 4.0, 0.5);

    // Region boundary counts as inside.
    CHECK(feasible({2.0, 2.0}, layout, 0));
    CHECK_FALSE(feasible({2.0 + 1e-12, 2.0}, layout, 0));
    CHECK_FALSE(feasible({0.0, -2.0 - 1e-12}, layout, 0));

    // Spacing is measured against the other antennas only.
    CHECK(feasible({1.0, 0.5}, layout, 0));        // exactly D from antenna 1
    CHECK_FALSE(feasible({1.0, 0.6}, layout, 0));  // 0.4 < D from antenna 1
    CHECK(feasible({0.1, 0.1}, layout, 0));        // near own old spot: fine
    CHECK_FALSE(feasible({0.1, 0.1}, layout, 1));  // near antenna 0: blocked
}

TEST_CASE("ascent traces are non-decreasing and every checkpoint is feasible") {
    const GradientConfig cfg;
    for (int rep = 0; rep < 20; ++rep) {
        const PathSet paths = sample_path_set(900 + rep, 4, -110.0, 1.0);
        const AntennaLayout init = initialize_layout(1900 + rep, 4, 4.0, 0.5);
        const OptimizationTrace trace = optimize_positions(paths, init, cfg);

        REQUIRE(trace.objective.size() == trace.layouts.size());
        REQUIRE(trace.objective.size() == static_cast<std::size_t>(trace.iterations_used) + 1);
        for (std::size_t k = 1; k < trace.objective.size(); ++k)
            CHECK(trace.objective[k] >= trace.objective[k - 1]);
        for (const auto &snapshot : trace.layouts)
            CHECK_NOTHROW(AntennaLayout(snapshot, init.region_size(), init.min_distance()));

        // Endpoint bookkeeping matches independent re-evaluation.
        CHECK(trace.objective.front() ==
              doctest::Approx(orc::layout_power(paths, init.positions())).epsilon(1e-12));
        CHECK(trace.objective.back() ==
              doctest::Approx(orc::layout_power(paths, trace.final_layout.positions()))
                  .epsilon(1e-12));
    }
}

TEST_CASE("optimization is deterministic in its inputs") {
    const PathSet paths = sample_path_set(61, 4, -110.0, 1.0);
    const AntennaLayout init = initialize_layout(62, 4, 4.0, 0.5);
    const GradientConfig cfg;
    const OptimizationTrace a = optimize_positions(paths, init, cfg);
    const OptimizationTrace b = optimize_positions(paths, init, cfg);

    REQUIRE(a.final_layout.size() == b.final_layout.size());
    for (std::size_t n = 0; n < a.final_layout.size(); ++n) {
        CHECK(a.final_layout.position(n).x == b.final_layout.position(n).x);
        CHECK(a.final_layout.position(n).y == b.final_layout.position(n).y);
    }
    CHECK(a.objective == b.objective);
    CHECK(a.iterations_used == b.iterations_used);
    CHECK(a.converged == b.converged);
}

TEST_CASE("a single-path link leaves every antenna in place") {
    const PathSet paths = sample_path_set(15, 1, -110.0, 1.0);
    const AntennaLayout init = initialize_layout(16, 3, 4.0, 0.5);
    const OptimizationTrace trace = optimize_positions(paths, init, GradientConfig{});

    CHECK(trace.converged);
    CHECK(trace.iterations_used == 1);  // first sweep already shows zero change
    for (std::size_t n = 0; n < init.size(); ++n) {
        CHECK(trace.final_layout.position(n).x == init.position(n).x);
        CHECK(trace.final_layout.position(n).y == init.position(n).y);
    }
}

TEST_CASE("optimized layouts beat their random initialization on most draws") {
    int improved = 0;
    const int total = 40;
    for (int rep = 0; rep < total; ++rep) {
        const PathSet paths = sample_path_set(4000 + rep, 4, -110.0, 1.0);
        const AntennaLayout init = initialize_layout(5000 + rep, 4, 4.0, 0.5);
        const OptimizationTrace trace = optimize_positions(paths, init, GradientConfig{});
        CHECK(trace.objective.back() >= trace.objective.front());
        if (trace.objective.back() > 1.05 * trace.objective.front())
            ++improved;
    }
    // Meaningful gains (>5%) on the large majority of draws.
    CHECK(improved >= 30);
}

TEST_CASE("runs settle well before the sweep budget on typical draws") {
    // Within one percent of the final value by sweep 30 on every draw, and
    // much earlier on the median draw.
    std::vector<int> settle;
    for (int rep = 0; rep < 40; ++rep) {
        const PathSet paths = sample_path_set(7000 + rep, 4, -110.0, 1.0);
        const AntennaLayout init = initialize_layout(8000 + rep, 4, 4.0, 0.5);
        const OptimizationTrace trace = optimize_positions(paths, init, GradientConfig{});
        const double target = 0.99 * trace.objective.back();
        int k = 0;
        while (trace.objective[static_cast<std::size_t>(k)] < target)
            ++k;
        settle.push_back(k);
        CHECK(k <= 30);
    }
    std::sort(settle.begin(), settle.end());
    CHECK(settle[settle.size() / 2] <= 20);
}

TEST_CASE("the convergence flag reflects the per-sweep change test") {
    const PathSet paths = sample_path_set(21, 4, -110.0, 1.0);
    const AntennaLayout init = initialize_layout(22, 4, 4.0, 0.5);

    GradientConfig strict;
    strict.max_iterations = 200;
    const OptimizationTrace done = optimize_positions(paths, init, strict);
    CHECK(done.converged);
    REQUIRE(done.objective.size() >= 2);
    const double last = done.objective.back();
    const double before = done.objective[done.objective.size() - 2];
    CHECK((last - before) / before < strict.convergence_tol);

    GradientConfig tiny = strict;
    tiny.max_iterations = 1;
    const OptimizationTrace cut = optimize_positions(paths, init, tiny);
    CHECK(cut.iterations_used == 1);
}

TEST_CASE("random initial layouts respect bounds, spacing and the seed") {
    const AntennaLayout a = initialize_layout(33, 6, 3.0, 0.5);
    const AntennaLayout b = initialize_layout(33, 6, 3.0, 0.5);
    const AntennaLayout c = initialize_layout(34, 6, 3.0, 0.5);

    REQUIRE(a.size() == 6);
    for (std::size_t n = 0; n < a.size(); ++n) {
        CHECK(std::abs(a.position(n).x) <= 1.5);
        CHECK(std::abs(a.position(n).y) <= 1.5);
        CHECK(a.position(n).x == b.position(n).x);
        CHECK(a.position(n).y == b.position(n).y);
    }
    CHECK(orc::min_pairwise_distance(a.positions()) >= 0.5);

    bool differs = false;
    for (std::size_t n = 0; n < a.size(); ++n)
        differs = differs || a.position(n).x != c.position(n).x;
    CHECK(differs);

    CHECK_THROWS_AS(initialize_layout(1, 100, 1.0, 0.5), PackingInfeasible);
    CHECK_THROWS_AS(initialize_layout(1, 0, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("gradient scale is invariant to joint wavelength rescaling") {
    // Scaling wavelength and positions together multiplies the gradient by
    // the inverse scale; the optimizer's internal step normalization relies
    // on exactly this behavior.
    const double scale = 10.0;
    const PathSet small = sample_path_set(77, 4, -110.0, 0.1);
    const PathSet big(small.elevations(), small.azimuths(), small.gains(), small.path_loss(),
                      small.wavelength() * scale);
    const Vec2 t{0.03, -0.07};
    const Vec2 gs = objective_gradient(small, t);
    const Vec2 gb = objective_gradient(big, scale * t);
    CHECK(gb.x == doctest::Approx(gs.x / scale).epsilon(1e-12));
    CHECK(gb.y == doctest::Approx(gs.y / scale).epsilon(1e-12));
}
