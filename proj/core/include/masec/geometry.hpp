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

#pragma once

#include <cmath>

namespace masec {

// Planar point/direction with value semantics; the transmit region is a
// square in this plane and antennas move continuously inside it.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

[[nodiscard]] constexpr Vec2 operator+(Vec2 a, Vec2 b) noexcept { return {a.x + b.x, a.y + b.y}; }
[[nodiscard]] constexpr Vec2 operator-(Vec2 a, Vec2 b) noexcept { return {a.x - b.x, a.y - b.y}; }
[[nodiscard]] constexpr Vec2 operator*(double s, Vec2 v) noexcept { return {s * v.x, s * v.y}; }

[[nodiscard]] constexpr double dot(Vec2 a, Vec2 b) noexcept { return a.x * b.x + a.y * b.y; }

[[nodiscard]] inline double norm(Vec2 v) noexcept { return std::hypot(v.x, v.y); }

[[nodiscard]] inline double distance(Vec2 a, Vec2 b) noexcept { return norm(a - b); }

}  // namespace masec
