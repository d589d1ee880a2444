/*
* Copyright (C) 2026 The infodiff authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#ifndef INFODIFF_CONFIG_HPP
#define INFODIFF_CONFIG_HPP

#include "infodiff/dtmc.hpp"
#include "infodiff/integrator.hpp"
#include "infodiff/model.hpp"
#include "infodiff/population.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace infodiff
{

struct DtmcSettings {
    double dt             = 0.0; // 0 selects the largest stable dt that divides sample_every
    std::size_t replicas  = 100;
    ChainMode mode        = ChainMode::full;
    std::uint64_t seed    = 1;

    friend bool operator==(const DtmcSettings&, const DtmcSettings&) = default;
};

/**
 * Everything a run needs. Scenario files are flat `key = value` lines with
 * `#` comments; arrays are comma separated with exactly m entries.
 *
 * Required keys: m, n_total, s0, a0. Defaults: alpha = 1, b = d = rho = delta
 * = phi = 0, eps = gamma = 1, d0 = 0, step = 0.01, horizon = 100,
 * sample_every = 1, extinction_threshold = 1e-3, dt = 0 (auto),
 * replicas = 100, mode = full, seed = 1, output = out.csv,
 * logistic.enabled = false, logistic.growth_rate = 1,
 * logistic.capacity = n_total, target_r0 unset.
 */
struct ScenarioConfig {
    ModelParams params;
    std::vector<double> s0;
    std::vector<double> a0;
    std::vector<double> d0;
    IntegrationConfig integration;
    DtmcSettings dtmc;
    LogisticConfig logistic;
    std::optional<double> target_r0;
    std::string output = "out.csv";

    /// Throws ConfigError naming the offending key.
    void validate() const;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Parses and validates. Errors carry the line number (syntax) or the key (validation).
ScenarioConfig parse_config(std::string_view text);

/// Every key explicitly, with round-trip precision: parse_config(render_config(c)) == c.
std::string render_config(const ScenarioConfig& config);

/// Reads a scenario file; the name `table2` resolves to the bundled default scenario.
ScenarioConfig load_config(const std::string& path_or_name);

/// Text of the bundled scenario (m = 2, N = 100 reference parameters).
std::string_view bundled_table2();

} // namespace infodiff

#endif // INFODIFF_CONFIG_HPP
