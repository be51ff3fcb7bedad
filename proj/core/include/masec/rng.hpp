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
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace masec {

// One step of the splitmix64 sequence. Used to spread a trial seed into
// decorrelated sub-seeds (one per random stream of the trial).
inline std::uint64_t splitmix64_next(std::uint64_t &state) noexcept {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// k-th sub-seed of `base` (k = 0, 1, ...): the (k+1)-th splitmix64 output.
inline std::uint64_t derive_seed(std::uint64_t base, unsigned k) noexcept {
    std::uint64_t state = base;
    std::uint64_t out = 0;
    for (unsigned i = 0; i <= k; ++i)
        out = splitmix64_next(state);
    return out;
}

// Seeded generator built on mt19937_64, whose output sequence is fixed by
// the standard. The floating-point constructions are spelled out here rather
// than taken from <random> distributions, so identical seeds produce
// identical draws on every platform and standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Circularly-symmetric complex Gaussian with zero mean and unit variance,
    // drawn as an exponential radius and an independent uniform phase.
    std::complex<double> complex_normal() {
        const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
        const double u2 = uniform01();
        return std::polar(std::sqrt(-std::log(u1)), 2.0 * std::numbers::pi * u2);
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace masec
