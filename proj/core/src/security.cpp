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

#include "masec/security.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "masec/errors.hpp"

namespace masec {

namespace {

double squared_norm_checked(const arma::cx_vec &h, const char *who) {
    const double nn = std::real(arma::cdot(h, h));
    if (nn == 0.0)
        throw DegenerateInput(std::string(who) + ": zero channel vector");
    return nn;
}

double log2_1p(double snr_linear) { return std::log2(1.0 + snr_linear); }

}  // namespace

arma::cx_vec mrt_beamformer(const arma::cx_vec &h_b, double signal_power) {
    if (signal_power < 0.0)
        throw std::invalid_argument("mrt_beamformer: signal power must be nonnegative");
    const double nn = squared_norm_checked(h_b, "mrt_beamformer");
    return (std::sqrt(signal_power) / std::sqrt(nn)) * h_b;
}

double min_signal_power(const arma::cx_vec &h_b, double target_snr, double noise_power) {
    if (!(target_snr > 0.0))
        throw std::invalid_argument("min_signal_power: target SNR must be positive");
    if (!(noise_power > 0.0))
        throw std::invalid_argument("min_signal_power: noise power must be positive");
    return target_snr * noise_power / squared_norm_checked(h_b, "min_signal_power");
}

arma::cx_mat an_covariance(const arma::cx_vec &h_b, double residual_power) {
    const std::size_t N = h_b.n_elem;
    if (N < 2)
        throw NoNullSpace("an_covariance: a single-antenna channel has no null space");
    if (residual_power < 0.0)
        throw std::invalid_argument("an_covariance: residual power must be nonnegative");
    const double nn = squared_norm_checked(h_b, "an_covariance");
    const arma::cx_mat projector =
        arma::eye<arma::cx_mat>(N, N) - (h_b * h_b.t()) / nn;  // onto the null space of h_b^H
    return (residual_power / static_cast<double>(N - 1)) * projector;
}

double snr(const arma::cx_vec &h, const arma::cx_vec &w, const arma::cx_mat &C,
           double noise_power) {
    if (!(noise_power > 0.0))
        throw std::invalid_argument("snr: noise power must be positive");
    if (h.n_elem != w.n_elem || C.n_rows != h.n_elem || C.n_cols != h.n_elem)
        throw std::invalid_argument("snr: dimension mismatch");
    const double signal = std::norm(arma::cdot(h, w));
    double an = std::real(arma::cdot(h, C * h));
    const double scale = arma::norm(C, "fro") * std::real(arma::cdot(h, h));
    if (an < -1e-9 * scale)
        throw std::invalid_argument("snr: noise covariance is not positive semidefinite");
    an = std::max(an, 0.0);
    return signal / (noise_power + an);
}

SecureDesign make_secure_design(const arma::cx_vec &h_b, double target_snr, double total_power,
                                double noise_power_b) {
    if (total_power < 0.0)
        throw std::invalid_argument("make_secure_design: total power must be nonnegative");
    const std::size_t N = h_b.n_elem;

    SecureDesign design;
    design.total_power = total_power;
    design.target_snr = target_snr;
    design.signal_power = min_signal_power(h_b, target_snr, noise_power_b);
    design.feasible = design.signal_power <= total_power;
    design.beamformer = mrt_beamformer(h_b, design.signal_power);
    design.an_active = N >= 2;
    if (design.an_active && design.feasible)
        design.an_covariance = an_covariance(h_b, total_power - design.signal_power);
    else
        design.an_covariance = arma::zeros<arma::cx_mat>(N, N);
    return design;
}

double secrecy_rate_simulated(const ChannelRealization &realization, const SecureDesign &design) {
    const double snr_b = snr(realization.h_b, design.beamformer, design.an_covariance,
                             realization.noise_power_b);
    const double snr_e = snr(realization.h_e, design.beamformer, design.an_covariance,
                             realization.noise_power_e);
    return std::max(log2_1p(snr_b) - log2_1p(snr_e), 0.0);
}

double secrecy_rate_closed_form(const arma::cx_vec &h_b, const arma::cx_vec &h_e, double target_snr,
                                double total_power, double noise_power_b, double noise_power_e) {
    if (h_b.n_elem != h_e.n_elem)
        throw std::invalid_argument("secrecy_rate_closed_form: vectors must have equal length");
    if (!(target_snr > 0.0))
        throw std::invalid_argument("secrecy_rate_closed_form: target SNR must be positive");
    if (!(noise_power_b > 0.0) || !(noise_power_e > 0.0))
        throw std::invalid_argument("secrecy_rate_closed_form: noise powers must be positive");
    const std::size_t N = h_b.n_elem;
    const double nn_b = squared_norm_checked(h_b, "secrecy_rate_closed_form");
    const double signal_power = target_snr * noise_power_b / nn_b;
    if (signal_power > total_power)
        throw InfeasibleDesign("secrecy_rate_closed_form: SNR target exceeds the power budget");

    const double nn_e = std::real(arma::cdot(h_e, h_e));
    const double cross = std::norm(arma::cdot(h_b, h_e));  // |h_b^H h_e|^2
    // Null-space jamming power received by Eve; nonnegative by the
    // Cauchy-Schwarz inequality, clamped against rounding.
    const double an_power =
        N >= 2 ? (total_power - signal_power) / static_cast<double>(N - 1) *
                     std::max(nn_e - cross / nn_b, 0.0)
               : 0.0;

    const double snr_b = signal_power * nn_b / noise_power_b;
    const double snr_e = signal_power / nn_b * cross / (noise_power_e + an_power);
    return std::max(log2_1p(snr_b) - log2_1p(snr_e), 0.0);
}

double secrecy_rate_correlation_form(const arma::cx_vec &h_b, const arma::cx_vec &h_e,
                                     double target_snr, double total_power, double noise_power) {
    if (!(target_snr > 0.0))
        throw std::invalid_argument("secrecy_rate_correlation_form: target SNR must be positive");
    if (!(noise_power > 0.0))
        throw std::invalid_argument("secrecy_rate_correlation_form: noise power must be positive");
    const std::size_t N = h_b.n_elem;
    const double nn_b = squared_norm_checked(h_b, "secrecy_rate_correlation_form");
    const double signal_power = target_snr * noise_power / nn_b;
    if (signal_power > total_power)
        throw InfeasibleDesign("secrecy_rate_correlation_form: SNR target exceeds the power budget");

    const double nn_e = std::real(arma::cdot(h_e, h_e));
    if (nn_e == 0.0)
        return log2_1p(target_snr);  // silent eavesdropper: full rate to Bob
    const double rho = channel_correlation(h_b, h_e);
    const double jam =
        N >= 2 ? (total_power - signal_power) * nn_e * (1.0 - rho) /
                     (static_cast<double>(N - 1) * noise_power)
               : 0.0;
    const double snr_e = target_snr * rho * (nn_e / nn_b) / (1.0 + jam);
    return std::max(log2_1p(target_snr) - log2_1p(snr_e), 0.0);
}

}  // namespace masec
