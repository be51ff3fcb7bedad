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

#include "masec/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "masec/errors.hpp"
#include "masec/rng.hpp"

namespace masec {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

Vec2 wave_vector(double elevation, double azimuth) noexcept {
    return {std::sin(elevation) * std::cos(azimuth), std::cos(elevation)};
}

PathSet::PathSet(std::vector<double> elevation, std::vector<double> azimuth,
                 std::vector<std::complex<double>> gain, double path_loss, double wavelength)
    : elevation_(std::move(elevation)),
      azimuth_(std::move(azimuth)),
      gain_(std::move(gain)),
      path_loss_(path_loss),
      wavelength_(wavelength) {
    if (elevation_.empty())
        throw std::invalid_argument("PathSet: at least one path required");
    if (azimuth_.size() != elevation_.size() || gain_.size() != elevation_.size())
        throw std::invalid_argument("PathSet: angle and gain lists must have equal length");
    if (!(wavelength_ > 0.0))
        throw std::invalid_argument("PathSet: wavelength must be positive");
    if (!(path_loss_ > 0.0))
        throw std::invalid_argument("PathSet: path loss must be positive");

    const std::size_t L = elevation_.size();
    rho_.resize(L);
    gain_mag_.resize(L);
    gain_phase_.resize(L);
    for (std::size_t l = 0; l < L; ++l) {
        rho_[l] = wave_vector(elevation_[l], azimuth_[l]);
        gain_mag_[l] = std::abs(gain_[l]);
        gain_phase_[l] = std::arg(gain_[l]);
    }
}

PathSet sample_path_set(std::uint64_t seed, int num_paths, double path_loss_db, double wavelength) {
    if (num_paths < 1)
        throw std::invalid_argument("sample_path_set: num_paths must be at least 1");
    if (!(wavelength > 0.0))
        throw std::invalid_argument("sample_path_set: wavelength must be positive");

    Rng rng(seed);
    const auto L = static_cast<std::size_t>(num_paths);
    std::vector<double> elevation(L);
    std::vector<double> azimuth(L);
    std::vector<std::complex<double>> gain(L);
    for (std::size_t l = 0; l < L; ++l) {
        elevation[l] = rng.uniform(0.0, std::numbers::pi);
        azimuth[l] = rng.uniform(0.0, std::numbers::pi);
        gain[l] = rng.complex_normal();
    }
    const double mu = std::pow(10.0, path_loss_db / 10.0);
    return PathSet(std::move(elevation), std::move(azimuth), std::move(gain), mu, wavelength);
}

std::complex<double> evaluate_channel(const PathSet &paths, Vec2 position) noexcept {
    const std::size_t L = paths.num_paths();
    const double k = two_pi / paths.wavelength();
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t l = 0; l < L; ++l)
        acc += paths.gain(l) * std::polar(1.0, -k * dot(position, paths.rho(l)));
    return std::sqrt(paths.path_loss() / static_cast<double>(L)) * acc;
}

AntennaLayout::AntennaLayout(std::vector<Vec2> positions, double region_size, double min_distance)
    : positions_(std::move(positions)), region_size_(region_size), min_distance_(min_distance) {
    if (positions_.empty())
        throw std::invalid_argument("AntennaLayout: at least one antenna required");
    if (region_size_ < 0.0 || min_distance_ < 0.0)
        throw std::invalid_argument("AntennaLayout: region size and spacing must be nonnegative");

    const double half = 0.5 * region_size_;
    for (const Vec2 &t : positions_)
        if (std::abs(t.x) > half || std::abs(t.y) > half)
            throw ConstraintViolation("AntennaLayout: position outside the transmit region");
    for (std::size_t n = 0; n + 1 < positions_.size(); ++n)
        for (std::size_t m = n + 1; m < positions_.size(); ++m)
            if (distance(positions_[n], positions_[m]) < min_distance_)
                throw ConstraintViolation("AntennaLayout: antennas closer than the minimum distance");
}

ChannelRealization assemble_channel(const PathSet &paths_b, const PathSet &paths_e,
                                    const AntennaLayout &layout, double noise_power_b,
                                    double noise_power_e) {
    const std::size_t N = layout.size();
    ChannelRealization real;
    real.h_b.set_size(N);
    real.h_e.set_size(N);
    for (std::size_t n = 0; n < N; ++n) {
        real.h_b(n) = evaluate_channel(paths_b, layout.position(n));
        real.h_e(n) = evaluate_channel(paths_e, layout.position(n));
    }
    real.noise_power_b = noise_power_b;
    real.noise_power_e = noise_power_e;
    return real;
}

double channel_correlation(const arma::cx_vec &h_b, const arma::cx_vec &h_e) {
    if (h_b.n_elem != h_e.n_elem)
        throw std::invalid_argument("channel_correlation: vectors must have equal length");
    const double nb2 = std::real(arma::cdot(h_b, h_b));
    const double ne2 = std::real(arma::cdot(h_e, h_e));
    if (nb2 == 0.0 || ne2 == 0.0)
        throw DegenerateInput("channel_correlation: zero channel vector");
    const double cross = std::norm(arma::cdot(h_b, h_e));
    return std::min(1.0, cross / (nb2 * ne2));
}

}  // namespace masec
