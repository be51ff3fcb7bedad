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
// Independent reference computations used as ground truth by the unit
// tests.  Each routine recomputes a library quantity from first
// principles (different summation order, extended precision, explicit
// loops, or exhaustive search) so that agreement between the two is
// meaningful evidence of correctness rather than a tautology.

#pragma once

#include <armadillo>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include <masec/channel.hpp>
#include <masec/geometry.hpp>

namespace masec::oracles {

inline constexpr double kPi = 3.14159265358979323846;

// Channel coefficient recomputed with long-double accumulators and the
// path sum taken in reverse order.  Shares only the raw per-path data
// with the library implementation.
inline std::complex<double> channel_sum(const PathSet& paths, Vec2 position) {
  long double re = 0.0L;
  long double im = 0.0L;
  const double k = 2.0 * kPi / paths.wavelength();
  for (std::size_t i = paths.num_paths(); i-- > 0;) {
    const Vec2 rho = paths.rho(i);
    const double phase_geom = -k * (position.x * rho.x + position.y * rho.y);
    const std::complex<double> gain = paths.gain(i);
    const long double total = static_cast<long double>(phase_geom) + std::arg(gain);
    const long double mag = std::abs(gain);
    re += mag * std::cos(static_cast<double>(total));
    im += mag * std::sin(static_cast<double>(total));
  }
  const long double scale = std::sqrt(static_cast<long double>(paths.path_loss()) /
                                      static_cast<long double>(paths.num_paths()));
  return {static_cast<double>(scale * re), static_cast<double>(scale * im)};
}

// Power of a single-antenna channel via the oracle sum.
inline double channel_power_at(const PathSet& paths, Vec2 position) {
  return std::norm(channel_sum(paths, position));
}

// Total received power over a layout, recomputed antenna by antenna.
inline double layout_power(const PathSet& paths, const std::vector<Vec2>& positions) {
  long double acc = 0.0L;
  for (const Vec2& t : positions) acc += channel_power_at(paths, t);
  return static_cast<double>(acc);
}

// Central finite-difference gradient of the layout power with respect to
// one antenna position.  step is an absolute displacement in metres.
inline Vec2 fd_gradient(const PathSet& paths, const std::vector<Vec2>& positions,
                        std::size_t antenna, double step) {
  auto perturbed = [&](double dx, double dy) {
    std::vector<Vec2> p = positions;
    p[antenna].x += dx;
    p[antenna].y += dy;
    return layout_power(paths, p);
  };
  const double gx = (perturbed(step, 0.0) - perturbed(-step, 0.0)) / (2.0 * step);
  const double gy = (perturbed(0.0, step) - perturbed(0.0, -step)) / (2.0 * step);
  return {gx, gy};
}

// Quadratic form h^H M h via explicit double loops.
inline double quadratic_form(const arma::cx_vec& h, const arma::cx_mat& m) {
  std::complex<long double> acc{0.0L, 0.0L};
  for (arma::uword r = 0; r < m.n_rows; ++r) {
    for (arma::uword c = 0; c < m.n_cols; ++c) {
      const std::complex<long double> hr{std::real(h(r)), -std::imag(h(r))};
      const std::complex<long double> hc{std::real(h(c)), std::imag(h(c))};
      const std::complex<long double> mv{std::real(m(r, c)), std::imag(m(r, c))};
      acc += hr * mv * hc;
    }
  }
  return static_cast<double>(std::real(acc));
}

// |h^H g|^2 / (|h|^2 |g|^2) with explicit loops; the normalized squared
// inner product that defines the channel correlation.
inline double correlation_loops(const arma::cx_vec& a, const arma::cx_vec& b) {
  std::complex<long double> inner{0.0L, 0.0L};
  long double na = 0.0L;
  long double nb = 0.0L;
  for (arma::uword i = 0; i < a.n_elem; ++i) {
    const std::complex<long double> ai{std::real(a(i)), std::imag(a(i))};
    const std::complex<long double> bi{std::real(b(i)), std::imag(b(i))};
    inner += std::conj(ai) * bi;
    na += std::norm(ai);
    nb += std::norm(bi);
  }
  return static_cast<double>(std::norm(inner) / (na * nb));
}

// Receive SNR for beamformer w, noise covariance contribution C and noise
// power sigma2, all via explicit loops:  |h^H w|^2 / (h^H C h + sigma2).
inline double snr_loops(const arma::cx_vec& h, const arma::cx_vec& w,
                        const arma::cx_mat& c, double sigma2) {
  std::complex<long double> sig{0.0L, 0.0L};
  for (arma::uword i = 0; i < h.n_elem; ++i) {
    const std::complex<long double> hi{std::real(h(i)), -std::imag(h(i))};
    const std::complex<long double> wi{std::real(w(i)), std::imag(w(i))};
    sig += hi * wi;
  }
  double interference = quadratic_form(h, c);
  if (interference < 0.0) interference = 0.0;
  return static_cast<double>(std::norm(sig)) / (interference + sigma2);
}

// Exhaustive 2-D grid search for the best single-antenna position inside
// the square [-half, half]^2 with the given grid pitch.
inline double grid_best_2d(const PathSet& paths, double half, double pitch) {
  const int n = static_cast<int>(std::llround(2.0 * half / pitch));
  double best = -1.0;
  for (int ix = 0; ix <= n; ++ix) {
    const double x = -half + pitch * ix;
    for (int iy = 0; iy <= n; ++iy) {
      const double y = -half + pitch * iy;
      const double f = channel_power_at(paths, {x, y});
      if (f > best) best = f;
    }
  }
  return best;
}

// Exhaustive 1-D grid search along the x-axis segment [-half, half].
inline double grid_best_1d(const PathSet& paths, double half, double pitch) {
  const int n = static_cast<int>(std::llround(2.0 * half / pitch));
  double best = -1.0;
  for (int ix = 0; ix <= n; ++ix) {
    const double x = -half + pitch * ix;
    const double f = channel_power_at(paths, {x, 0.0});
    if (f > best) best = f;
  }
  return best;
}

// Minimum pairwise distance of a layout; +inf for fewer than two points.
inline double min_pairwise_distance(const std::vector<Vec2>& positions) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < positions.size(); ++i)
    for (std::size_t j = i + 1; j < positions.size(); ++j)
      best = std::min(best, distance(positions[i], positions[j]));
  return best;
}

}  // namespace masec::oracles
