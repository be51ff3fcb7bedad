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
// Secure transmit design without eavesdropper channel knowledge: spend the
// minimum power that meets Bob's SNR target on a maximum-ratio beam, and
// radiate the entire remaining budget as artificial noise spread uniformly
// over the null space of Bob's channel. Bob is unaffected by construction;
// any eavesdropper whose channel is not colinear with Bob's is jammed.

#pragma once

#include <armadillo>

#include "masec/channel.hpp"

namespace masec {

// Maximum-ratio transmission beamformer w = sqrt(signal_power) * h / ||h||.
// Throws DegenerateInput on a zero channel, std::invalid_argument on
// negative power.
[[nodiscard]] arma::cx_vec mrt_beamformer(const arma::cx_vec &h_b, double signal_power);

// Smallest transmit power that reaches `target_snr` at Bob under maximum-
// ratio transmission and null-space noise: gamma * sigma^2 / ||h_b||^2.
// Throws DegenerateInput on a zero channel, std::invalid_argument unless
// target_snr > 0 and noise_power > 0.
[[nodiscard]] double min_signal_power(const arma::cx_vec &h_b, double target_snr, double noise_power);

// Artificial-noise covariance: residual_power spread isotropically over the
// null space of h_b,
//
//   C = residual_power / (N - 1) * (I - h_b h_b^H / ||h_b||^2).
//
// Throws NoNullSpace when h_b has a single element, DegenerateInput on a
// zero channel, std::invalid_argument on negative residual power.
[[nodiscard]] arma::cx_mat an_covariance(const arma::cx_vec &h_b, double residual_power);

// Receive SNR |h^H w|^2 / (noise_power + h^H C h). The quadratic form is
// clamped at zero; a value below -1e-9 * ||C||_F * ||h||^2 means C is not
// positive semidefinite and raises std::invalid_argument.
[[nodiscard]] double snr(const arma::cx_vec &h, const arma::cx_vec &w, const arma::cx_mat &C,
                         double noise_power);

// Complete transmit strategy for one channel realization.
struct SecureDesign {
    arma::cx_vec beamformer;     // w, ||w||^2 == signal_power
    arma::cx_mat an_covariance;  // C, trace(C) == total_power - signal_power when feasible
    double signal_power = 0.0;   // minimum power meeting the SNR target
    double total_power = 0.0;    // transmit budget
    double target_snr = 0.0;     // linear scale
    bool an_active = false;      // false for N == 1: no null space, all-signal design
    bool feasible = false;       // signal_power <= total_power
};

// Builds the design: minimum-power beam toward Bob plus null-space noise
// with every leftover watt. For N == 1 the noise covariance stays zero and
// an_active is false. When the target needs more than the budget the design
// is returned with feasible == false, signal_power still reporting the
// required power and a zero noise covariance.
[[nodiscard]] SecureDesign make_secure_design(const arma::cx_vec &h_b, double target_snr,
                                              double total_power, double noise_power_b);

// Achievable secrecy rate max(log2(1+snr_bob) - log2(1+snr_eve), 0) with
// both SNRs evaluated mechanically from the design (bits/s/Hz). The caller
// is responsible for only passing feasible designs.
[[nodiscard]] double secrecy_rate_simulated(const ChannelRealization &realization,
                                            const SecureDesign &design);

// Same quantity in closed form from the two channel vectors:
// Bob meets the target exactly, Eve sees the beam leakage
// |h_b^H h_e|^2 * P_T / ||h_b||^2 over her noise plus the null-space noise
// power (total_power - P_T) / (N-1) * (||h_e||^2 - |h_b^H h_e|^2/||h_b||^2).
// Throws InfeasibleDesign when the target exceeds the budget.
[[nodiscard]] double secrecy_rate_closed_form(const arma::cx_vec &h_b, const arma::cx_vec &h_e,
                                              double target_snr, double total_power,
                                              double noise_power_b, double noise_power_e);

// Equal-noise specialization written in terms of the normalized correlation
// rho = channel_correlation(h_b, h_e); algebraically identical to
// secrecy_rate_closed_form with noise_power_e == noise_power_b.
[[nodiscard]] double secrecy_rate_correlation_form(const arma::cx_vec &h_b, const arma::cx_vec &h_e,
                                                   double target_snr, double total_power,
                                                   double noise_power);

}  // namespace masec
