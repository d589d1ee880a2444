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
#include "infodiff/experiments.hpp"
#include "infodiff/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace infodiff
{

namespace
{

std::vector<std::int64_t> to_counts(const std::vector<double>& values, const char* key)
{
    std::vector<std::int64_t> counts;
    counts.reserve(values.size());
    for (double v : values) {
        if (v != std::floor(v)) {
            throw ConfigError(std::string(key) + ": stochastic runs need whole-number initial counts", key);
        }
        counts.push_back(static_cast<std::int64_t>(v));
    }
    return counts;
}

double nan_or(const std::optional<double>& v)
{
    return v ? *v : std::numeric_limits<double>::quiet_NaN();
}

std::vector<double> peak_actives(const TrajectoryTable& traj)
{
    std::vector<double> peak(traj.groups, 0.0);
    for (const auto& sample : traj.samples) {
        for (std::size_t i = 0; i < traj.groups; ++i) {
            peak[i] = std::max(peak[i], sample.a[i]);
        }
    }
    return peak;
}

} // namespace

ModelParams effective_params(const ScenarioConfig& config)
{
    ModelParams p = config.params;
    if (config.target_r0) {
        p.alpha = calibrate_alpha(p, *config.target_r0);
    }
    return p;
}

ContinuousState initial_continuous(const ScenarioConfig& config)
{
    ContinuousState st;
    st.s  = config.s0;
    st.a  = config.a0;
    st.dd = config.d0;
    return st;
}

DiscreteState initial_discrete(const ScenarioConfig& config)
{
    return {to_counts(config.s0, "s0"), to_counts(config.a0, "a0"), to_counts(config.d0, "d0")};
}

std::int64_t population_cap(const ScenarioConfig& config)
{
    const double initial = initial_continuous(config).total();
    double cap           = 0.0;
    if (config.dtmc.mode == ChainMode::paper_literal) {
        cap = initial;
    }
    else if (config.logistic.enabled) {
        cap = 2.0 * std::max(initial, config.logistic.capacity);
    }
    else {
        // births are the only inflow; allow three times their expected count over the horizon
        const double births = std::accumulate(config.params.b.begin(), config.params.b.end(), 0.0);
        cap = std::max(initial, config.params.n_total) + 3.0 * births * config.integration.horizon;
    }
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(cap)));
}

DtmcConfig dtmc_config(const ScenarioConfig& config, const ModelParams& params)
{
    const double sample_every = config.integration.sample_every;
    DtmcConfig cfg;
    cfg.mode    = config.dtmc.mode;
    cfg.horizon = config.integration.horizon;
    if (config.dtmc.dt > 0.0) {
        cfg.dt = config.dtmc.dt;
    }
    else {
        const LogisticConfig logistic = config.logistic.enabled ? config.logistic : LogisticConfig{};
        const double dt_max = max_stable_dt(params, logistic, population_cap(config), 1.0, cfg.horizon);
        const double pieces = std::max(1.0, std::ceil(sample_every / dt_max - 1e-12));
        cfg.dt              = sample_every / pieces;
    }
    cfg.record_every = static_cast<std::size_t>(std::llround(sample_every / cfg.dt));
    cfg.validate();
    return cfg;
}

TrajectoryTable run_ode(const ScenarioConfig& config)
{
    config.validate();
    return integrate(effective_params(config), initial_continuous(config), config.integration, config.logistic);
}

TrajectoryTable run_dtmc(const ScenarioConfig& config, unsigned threads)
{
    config.validate();
    const ModelParams params = effective_params(config);
    return monte_carlo_mean(params, initial_discrete(config), dtmc_config(config, params), config.dtmc.replicas,
                            config.dtmc.seed, config.logistic, threads);
}

Comparison run_compare(const ScenarioConfig& config, unsigned threads)
{
    return {run_ode(config), run_dtmc(config, threads)};
}

Table extinction_sweep(const ScenarioConfig& config, std::span<const double> r0_grid, unsigned threads)
{
    config.validate();
    if (r0_grid.empty()) {
        throw ConfigError("extinction sweep: empty R0 grid", "r0-grid");
    }
    const DiscreteState init_discrete    = initial_discrete(config);
    const ContinuousState init_continous = initial_continuous(config);

    Table table;
    table.header = {"r0",       "alpha",    "mean_extinction_time", "sd_extinction_time",
                    "censored", "replicas", "ode_extinction_time"};
    for (double r0 : r0_grid) {
        ModelParams params = config.params;
        params.alpha       = calibrate_alpha(config.params, r0);

        const ExtinctionStats stats =
            extinction_time_stochastic(params, init_discrete, dtmc_config(config, params), config.dtmc.replicas,
                                       config.dtmc.seed, config.logistic, threads);
        const TrajectoryTable ode = integrate(params, init_continous, config.integration, config.logistic);
        const auto ode_time = extinction_time_deterministic(ode, config.integration.extinction_threshold);

        table.rows.push_back({r0, params.alpha, nan_or(stats.mean),
                              stats.mean ? stats.spread : std::numeric_limits<double>::quiet_NaN(),
                              static_cast<double>(stats.censored), static_cast<double>(config.dtmc.replicas),
                              nan_or(ode_time)});
    }
    return table;
}

LogisticSweep logistic_sweep(const ScenarioConfig& config, std::span<const double> capacity_grid, unsigned threads)
{
    config.validate();
    if (capacity_grid.empty()) {
        throw ConfigError("logistic sweep: empty capacity grid", "k-grid");
    }
    const std::size_t m = config.params.m;

    LogisticSweep sweep;
    sweep.summary.header.push_back("capacity");
    for (const char* prefix : {"ode_peak_A_", "mc_peak_A_"}) {
        for (std::size_t i = 1; i <= m; ++i) {
            sweep.summary.header.push_back(prefix + std::to_string(i));
        }
    }
    for (double capacity : capacity_grid) {
        ScenarioConfig run          = config;
        run.logistic.enabled        = true;
        run.logistic.capacity       = capacity;
        run.validate();
        Comparison cmp              = run_compare(run, threads);
        std::vector<double> row{capacity};
        for (double v : peak_actives(cmp.ode)) {
            row.push_back(v);
        }
        for (double v : peak_actives(cmp.monte_carlo)) {
            row.push_back(v);
        }
        sweep.summary.rows.push_back(std::move(row));
        sweep.runs.push_back(std::move(cmp));
    }
    return sweep;
}

} // namespace infodiff
