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
// JSON configuration parsing. Every key is optional and falls back to the
// built-in default; unknown keys are rejected so typos cannot silently run
// the wrong experiment.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "masec/errors.hpp"
#include "masec/experiment.hpp"

namespace masec {

namespace {

using nlohmann::json;

double as_double(const std::string &key, const json &value) {
    if (!value.is_number())
        throw ConfigError("config: \"" + key + "\" must be a number");
    return value.get<double>();
}

int as_int(const std::string &key, const json &value) {
    if (!value.is_number_integer())
        throw ConfigError("config: \"" + key + "\" must be an integer");
    return value.get<int>();
}

std::uint64_t as_uint64(const std::string &key, const json &value) {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0))
        throw ConfigError("config: \"" + key + "\" must be a nonnegative integer");
    return value.get<std::uint64_t>();
}

std::string as_string(const std::string &key, const json &value) {
    if (!value.is_string())
        throw ConfigError("config: \"" + key + "\" must be a string");
    return value.get<std::string>();
}

// A scalar stands for a single-point grid, an array for a sweep.
std::vector<double> as_grid(const std::string &key, const json &value) {
    if (value.is_number())
        return {value.get<double>()};
    if (value.is_array()) {
        std::vector<double> grid;
        grid.reserve(value.size());
        for (const json &v : value) {
            if (!v.is_number())
                throw ConfigError("config: \"" + key + "\" entries must be numbers");
            grid.push_back(v.get<double>());
        }
        return grid;
    }
    throw ConfigError("config: \"" + key + "\" must be a number or an array of numbers");
}

}  // namespace

ExperimentConfig parse_config(const std::string &json_text) {
    const json root = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
    if (root.is_discarded())
        throw ConfigError("config: malformed JSON");
    if (!root.is_object())
        throw ConfigError("config: top level must be a JSON object");

    ExperimentConfig cfg;
    for (const auto &[key, value] : root.items()) {
        if (key == "N") {
            cfg.num_antennas = as_int(key, value);
        } else if (key == "L_b") {
            cfg.num_paths_bob = as_int(key, value);
        } else if (key == "L_e") {
            cfg.num_paths_eve = as_int(key, value);
        } else if (key == "A_over_lambda") {
            cfg.region_sizes = as_grid(key, value);
        } else if (key == "D_over_lambda") {
            cfg.min_distance = as_double(key, value);
        } else if (key == "gamma_db") {
            cfg.gamma_db = as_grid(key, value);
        } else if (key == "P_over_sigma_db") {
            cfg.power_ratio = as_double(key, value);
        } else if (key == "power_ratio_scale") {
            const std::string scale = as_string(key, value);
            if (scale == "db")
                cfg.power_ratio_in_db = true;
            else if (scale == "linear")
                cfg.power_ratio_in_db = false;
            else
                throw ConfigError("config: \"power_ratio_scale\" must be \"db\" or \"linear\"");
        } else if (key == "path_loss_db") {
            cfg.path_loss_db = as_double(key, value);
        } else if (key == "N0_dbm_per_hz") {
            cfg.noise_density_dbm_hz = as_double(key, value);
        } else if (key == "bandwidth_hz") {
            cfg.bandwidth_hz = as_double(key, value);
        } else if (key == "sigma_e_over_sigma_b_db") {
            cfg.eve_noise_offset_db = as_double(key, value);
        } else if (key == "trials") {
            cfg.trials = as_int(key, value);
        } else if (key == "base_seed") {
            cfg.base_seed = as_uint64(key, value);
        } else if (key == "optimizer") {
            const std::string name = as_string(key, value);
            if (name == "gradient2d")
                cfg.optimizer = OptimizerKind::gradient2d;
            else if (name == "bsum1d")
                cfg.optimizer = OptimizerKind::bsum1d;
            else
                throw ConfigError("config: \"optimizer\" must be \"gradient2d\" or \"bsum1d\"");
        } else if (key == "max_iterations") {
            cfg.gradient.max_iterations = as_int(key, value);
        } else if (key == "initial_step") {
            cfg.gradient.initial_step = as_double(key, value);
        } else if (key == "min_step") {
            cfg.gradient.min_step = as_double(key, value);
        } else if (key == "convergence_tol") {
            cfg.gradient.convergence_tol = as_double(key, value);
        } else {
            throw ConfigError("config: unknown key \"" + key + "\"");
        }
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace masec
