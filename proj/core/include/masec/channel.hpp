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
// Field-response channel model for a planar movable-antenna transmitter.
// Each link is a finite sum of plane-wave paths; moving an antenna inside
// the transmit region only changes the per-path phase, so the channel seen
// at position t is
//
//   h(t) = sqrt(mu / L) * sum_l sigma_l * exp(-j * (2*pi/lambda) * t.rho_l)
//
// with rho_l the direction cosines of path l, sigma_l its complex fading
// gain, mu the average path-power gain and lambda the carrier wavelength.

#pragma once

#include <armadillo>
#include <complex>
#include <cstdint>
#include <vector>

#include "masec/geometry.hpp"

namespace masec {

// Direction cosines of one departing path: [sin(el)*cos(az), cos(el)].
[[nodiscard]] Vec2 wave_vector(double elevation, double azimuth) noexcept;

// Multipath description of one transmitter-receiver link. Immutable after
// construction; wave vectors and gain polar forms are precomputed because
// they sit in the optimizer inner loops.
class PathSet {
  public:
    // Angles in radians, gains on linear amplitude scale, path_loss the
    // common linear power gain, wavelength in meters.
    // Throws std::invalid_argument on empty paths, mismatched lengths, a
    // non-positive wavelength or a non-positive path loss.
    PathSet(std::vector<double> elevation, std::vector<double> azimuth,
            std::vector<std::complex<double>> gain, double path_loss, double wavelength);

    [[nodiscard]] std::size_t num_paths() const noexcept { return elevation_.size(); }
    [[nodiscard]] double path_loss() const noexcept { return path_loss_; }
    [[nodiscard]] double wavelength() const noexcept { return wavelength_; }

    [[nodiscard]] double elevation(std::size_t l) const noexcept { return elevation_[l]; }
    [[nodiscard]] double azimuth(std::size_t l) const noexcept { return azimuth_[l]; }
    [[nodiscard]] std::complex<double> gain(std::size_t l) const noexcept { return gain_[l]; }
    [[nodiscard]] Vec2 rho(std::size_t l) const noexcept { return rho_[l]; }
    [[nodiscard]] double gain_magnitude(std::size_t l) const noexcept { return gain_mag_[l]; }
    [[nodiscard]] double gain_phase(std::size_t l) const noexcept { return gain_phase_[l]; }

    [[nodiscard]] const std::vector<double> &elevations() const noexcept { return elevation_; }
    [[nodiscard]] const std::vector<double> &azimuths() const noexcept { return azimuth_; }
    [[nodiscard]] const std::vector<std::complex<double>> &gains() const noexcept { return gain_; }

  private:
    std::vector<double> elevation_;
    std::vector<double> azimuth_;
    std::vector<std::complex<double>> gain_;
    std::vector<Vec2> rho_;
    std::vector<double> gain_mag_;
    std::vector<double> gain_phase_;
    double path_loss_;
    double wavelength_;
};

// Draws a random link: elevation and azimuth i.i.d. uniform on [0, pi],
// gains i.i.d. circularly-symmetric complex Gaussian with unit variance.
// Per path the draw order is (elevation, azimuth, gain). path_loss_db is
// converted as mu = 10^(path_loss_db / 10).
// Throws std::invalid_argument if num_paths < 1 or wavelength <= 0.
[[nodiscard]] PathSet sample_path_set(std::uint64_t seed, int num_paths, double path_loss_db,
                                      double wavelength);

// Channel coefficient observed when one antenna sits at `position`.
[[nodiscard]] std::complex<double> evaluate_channel(const PathSet &paths, Vec2 position) noexcept;

// N antenna positions inside the square [-A/2, A/2]^2 with pairwise spacing
// at least D (both bounds inclusive). Immutable after construction; the
// constructor enforces the invariants and throws ConstraintViolation on a
// violation (std::invalid_argument on an empty list or negative A or D).
class AntennaLayout {
  public:
    AntennaLayout(std::vector<Vec2> positions, double region_size, double min_distance);

    [[nodiscard]] std::size_t size() const noexcept { return positions_.size(); }
    [[nodiscard]] Vec2 position(std::size_t n) const noexcept { return positions_[n]; }
    [[nodiscard]] const std::vector<Vec2> &positions() const noexcept { return positions_; }
    [[nodiscard]] double region_size() const noexcept { return region_size_; }
    [[nodiscard]] double min_distance() const noexcept { return min_distance_; }

  private:
    std::vector<Vec2> positions_;
    double region_size_;
    double min_distance_;
};

// Channel vectors of the legitimate and the eavesdropping link for one
// antenna layout, with the two receiver noise powers (watts).
struct ChannelRealization {
    arma::cx_vec h_b;
    arma::cx_vec h_e;
    double noise_power_b = 0.0;
    double noise_power_e = 0.0;
};

// Evaluates both links at every antenna of `layout`. Element n of each
// vector is the channel at position t_n.
[[nodiscard]] ChannelRealization assemble_channel(const PathSet &paths_b, const PathSet &paths_e,
                                                  const AntennaLayout &layout, double noise_power_b,
                                                  double noise_power_e);

// Squared normalized inner product |h_b^H h_e|^2 / (|h_b|^2 |h_e|^2),
// clipped to at most 1 against rounding. Throws DegenerateInput when either
// vector is zero, std::invalid_argument on mismatched lengths.
[[nodiscard]] double channel_correlation(const arma::cx_vec &h_b, const arma::cx_vec &h_e);

}  // namespace masec
