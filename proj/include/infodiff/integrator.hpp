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
#ifndef INFODIFF_INTEGRATOR_HPP
#define INFODIFF_INTEGRATOR_HPP

#include "infodiff/model.hpp"
#include "infodiff/population.hpp"
#include "infodiff/trajectory.hpp"

#include <cstddef>
#include <optional>

namespace infodiff
{

struct IntegrationConfig {
    double step                 = 0.01;
    double horizon              = 100.0;
    double sample_every         = 1.0;
    double extinction_threshold = 1e-3;

    /// step <= sample_every <= horizon, sample_every an integer multiple of step.
    void validate() const;
    std::size_t steps_per_sample() const;
    std::size_t total_steps() const;

    friend bool operator==(const IntegrationConfig&, const IntegrationConfig&) = default;
};

struct IntegrationStats {
    std::size_t steps         = 0;
    std::size_t clamped_steps = 0;

    double clamped_fraction() const
    {
        return steps == 0 ? 0.0 : static_cast<double>(clamped_steps) / static_cast<double>(steps);
    }
};

/// Runs with a larger share of clamped steps are rejected.
inline constexpr double max_clamped_fraction = 1e-3;

/// One classic RK4 step of size h; negative entries are clamped to 0 afterwards. Returns true if clamped.
bool rk4_step(const ModelParams& params, const LogisticConfig& logistic, ContinuousState& state, double h);

/**
 * Fixed-step RK4 integration, sampled every cfg.sample_every starting at t = 0.
 * Sample times are exact multiples of the step so tables with different
 * sampling agree bitwise at shared times.
 *
 * Throws NumericError on NaN/Inf or when more than max_clamped_fraction of the
 * steps needed clamping.
 */
TrajectoryTable integrate(const ModelParams& params, const ContinuousState& init, const IntegrationConfig& cfg,
                          const LogisticConfig& logistic = {}, IntegrationStats* stats = nullptr);

/// Earliest sample time after which the summed actives stay below threshold; nullopt if never.
std::optional<double> extinction_time_deterministic(const TrajectoryTable& traj, double threshold);

} // namespace infodiff

#endif // INFODIFF_INTEGRATOR_HPP
