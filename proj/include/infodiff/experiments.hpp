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
#ifndef INFODIFF_EXPERIMENTS_HPP
#define INFODIFF_EXPERIMENTS_HPP

#include "infodiff/config.hpp"
#include "infodiff/trajectory.hpp"

#include <span>
#include <vector>

namespace infodiff
{

/// Scenario parameters with alpha replaced by the calibrated value when target_r0 is set.
ModelParams effective_params(const ScenarioConfig& config);

ContinuousState initial_continuous(const ScenarioConfig& config);

/// Throws ConfigError if an initial count is not integral.
DiscreteState initial_discrete(const ScenarioConfig& config);

/// Upper bound on the population a DTMC run of this scenario is sized for.
std::int64_t population_cap(const ScenarioConfig& config);

/**
 * DTMC settings for a scenario. With dt = 0 the step is the largest divisor
 * sample_every / k not above max_stable_dt; an explicit dt must divide
 * sample_every.
 */
DtmcConfig dtmc_config(const ScenarioConfig& config, const ModelParams& params);

TrajectoryTable run_ode(const ScenarioConfig& config);
TrajectoryTable run_dtmc(const ScenarioConfig& config, unsigned threads = 0);

struct Comparison {
    TrajectoryTable ode;
    TrajectoryTable monte_carlo;
};
Comparison run_compare(const ScenarioConfig& config, unsigned threads = 0);

/**
 * For each R0 in the grid: calibrate alpha, measure stochastic extinction over
 * the configured replicas (same seeds for every grid point) and the
 * deterministic extinction time. Columns:
 * r0,alpha,mean_extinction_time,sd_extinction_time,censored,replicas,ode_extinction_time
 */
Table extinction_sweep(const ScenarioConfig& config, std::span<const double> r0_grid, unsigned threads = 0);

struct LogisticSweep {
    Table summary; // capacity,ode_peak_A_1..m,mc_peak_A_1..m
    std::vector<Comparison> runs;
};

/// Logistic population runs, one per carrying capacity, everything else fixed.
LogisticSweep logistic_sweep(const ScenarioConfig& config, std::span<const double> capacity_grid,
                             unsigned threads = 0);

} // namespace infodiff

#endif // INFODIFF_EXPERIMENTS_HPP
