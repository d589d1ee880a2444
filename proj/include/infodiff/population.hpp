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
#ifndef INFODIFF_POPULATION_HPP
#define INFODIFF_POPULATION_HPP

#include "infodiff/model.hpp"

namespace infodiff
{

struct DiscreteState;

/**
 * Logistic coupling of births and deaths to the instantaneous population N:
 * total births growth_rate * N, per-capita deaths growth_rate * N / capacity,
 * so that dN/dt = growth_rate * N * (1 - N / capacity).
 */
struct LogisticConfig {
    bool enabled       = false;
    double growth_rate = 1.0;
    double capacity    = 1.0;

    void validate() const;

    friend bool operator==(const LogisticConfig&, const LogisticConfig&) = default;
};

struct LogisticRates {
    double birth_total      = 0.0;
    double death_per_capita = 0.0;

    double net_growth(double n) const
    {
        return birth_total - death_per_capita * n;
    }
};

LogisticRates logistic_rates(const LogisticConfig& cfg, double n);

/**
 * Parameters in effect at population `population`: b_i = growth_rate * N / m,
 * d_i = growth_rate * N / capacity and n_total = N. Returns params unchanged
 * when cfg is disabled. n_total is left alone while N = 0 (no actives exist then).
 */
ModelParams apply_logistic(const ModelParams& params, const LogisticConfig& cfg, double population);
ModelParams apply_logistic(const ModelParams& params, const LogisticConfig& cfg, const ContinuousState& state);
ModelParams apply_logistic(const ModelParams& params, const LogisticConfig& cfg, const DiscreteState& state);

} // namespace infodiff

#endif // INFODIFF_POPULATION_HPP
