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
#include "infodiff/population.hpp"
#include "infodiff/dtmc.hpp"

#include <cmath>

namespace infodiff
{

void LogisticConfig::validate() const
{
    if (!std::isfinite(capacity) || capacity <= 0.0) {
        throw DomainError("logistic: capacity must be finite and > 0");
    }
    if (!std::isfinite(growth_rate) || growth_rate < 0.0) {
        throw DomainError("logistic: growth rate must be finite and >= 0");
    }
}

LogisticRates logistic_rates(const LogisticConfig& cfg, double n)
{
    if (!(n >= 0.0)) {
        throw DomainError("logistic_rates: population must be >= 0");
    }
    return {cfg.growth_rate * n, cfg.growth_rate * n / cfg.capacity};
}

ModelParams apply_logistic(const ModelParams& params, const LogisticConfig& cfg, double population)
{
    if (!cfg.enabled) {
        return params;
    }
    const LogisticRates rates = logistic_rates(cfg, population);
    ModelParams eff           = params;
    const double per_group    = rates.birth_total / static_cast<double>(params.m);
    eff.b.assign(params.m, per_group);
    eff.d.assign(params.m, rates.death_per_capita);
    if (population > 0.0) {
        eff.n_total = population;
    }
    return eff;
}

ModelParams apply_logistic(const ModelParams& params, const LogisticConfig& cfg, const ContinuousState& state)
{
    return apply_logistic(params, cfg, state.total());
}

ModelParams apply_logistic(const ModelParams& params, const LogisticConfig& cfg, const DiscreteState& state)
{
    return apply_logistic(params, cfg, static_cast<double>(state.total()));
}

} // namespace infodiff
