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
// CSV emission. Numbers are rendered through std::to_chars, which is
// locale-independent and deterministic, so repeated runs of the same
// experiment produce byte-identical files.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>

#include "masec/experiment.hpp"

namespace masec {

namespace {

void append_double(std::string &out, double value) {
    char buf[40];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    out.append(buf, res.ptr);
}

void append_uint(std::string &out, std::uint64_t value) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    out.append(buf, res.ptr);
}

}  // namespace

std::string format_csv_double(double value) {
    std::string out;
    append_double(out, value);
    return out;
}

std::string trials_csv(const SweepResult &result) {
    std::size_t num_antennas = 0;
    for (const auto &records : result.trials)
        for (const TrialRecord &r : records)
            num_antennas = std::max(num_antennas, r.ma_positions.size());

    std::string out;
    out += "axis_value,trial,seed,ma_channel_power,fpa_channel_power,ma_signal_power,"
           "fpa_signal_power,ma_feasible,fpa_feasible,ma_secrecy_rate,fpa_secrecy_rate,"
           "ma_correlation,fpa_correlation,iterations";
    for (std::size_t n = 0; n < num_antennas; ++n) {
        out += ",x" + std::to_string(n) + ",y" + std::to_string(n);
    }
    out += "\n";

    for (std::size_t i = 0; i < result.trials.size(); ++i) {
        const double axis_value = result.axis_values[i];
        const auto &records = result.trials[i];
        for (std::size_t t = 0; t < records.size(); ++t) {
            const TrialRecord &r = records[t];
            append_double(out, axis_value);
            out += ',';
            append_uint(out, t);
            out += ',';
            append_uint(out, r.seed);
            out += ',';
            append_double(out, r.ma_channel_power);
            out += ',';
            append_double(out, r.fpa_channel_power);
            out += ',';
            append_double(out, r.ma_signal_power);
            out += ',';
            append_double(out, r.fpa_signal_power);
            out += ',';
            out += r.ma_feasible ? '1' : '0';
            out += ',';
            out += r.fpa_feasible ? '1' : '0';
            out += ',';
            append_double(out, r.ma_secrecy_rate);
            out += ',';
            append_double(out, r.fpa_secrecy_rate);
            out += ',';
            append_double(out, r.ma_correlation);
            out += ',';
            append_double(out, r.fpa_correlation);
            out += ',';
            append_uint(out, static_cast<std::uint64_t>(r.iterations_used));
            for (std::size_t n = 0; n < num_antennas; ++n) {
                out += ',';
                if (n < r.ma_positions.size()) {
                    append_double(out, r.ma_positions[n].x);
                    out += ',';
                    append_double(out, r.ma_positions[n].y);
                } else {
                    out += ',';
                }
            }
            out += '\n';
        }
    }
    return out;
}

std::string summary_csv(const SweepResult &result) {
    std::string out = "axis_value,ma_mean,ma_std,fpa_mean,fpa_std,infeasible_frac\n";
    for (const SummaryRow &row : result.summary) {
        append_double(out, row.axis_value);
        out += ',';
        append_double(out, row.ma_mean);
        out += ',';
        append_double(out, row.ma_std);
        out += ',';
        append_double(out, row.fpa_mean);
        out += ',';
        append_double(out, row.fpa_std);
        out += ',';
        append_double(out, row.infeasible_frac);
        out += '\n';
    }
    return out;
}

std::string trace_csv(const ConvergenceReport &report) {
    std::string out = "seed,iteration,objective\n";
    for (std::size_t i = 0; i < report.objective.size(); ++i) {
        for (std::size_t it = 0; it < report.objective[i].size(); ++it) {
            append_uint(out, report.seeds[i]);
            out += ',';
            append_uint(out, it);
            out += ',';
            append_double(out, report.objective[i][it]);
            out += '\n';
        }
    }
    return out;
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw std::runtime_error("write failed: " + path.string());
}

}  // namespace masec
