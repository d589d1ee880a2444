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
#include "infodiff/integrator.hpp"

#include <cmath>
#include <string>

namespace infodiff
{

namespace
{

bool is_integer_ratio(double num, double den, std::size_t& ratio)
{
    const double r       = num / den;
    const double rounded = std::round(r);
    if (rounded < 1.0 || std::abs(r - rounded) > 1e-9 * rounded) {
        return false;
    }
    ratio = static_cast<std::size_t>(rounded);
    return true;
}

StateRate rhs(const ModelParams& params, const LogisticConfig& logistic, const ContinuousState& state)
{
    if (logistic.enabled) {
        return ode_rhs(apply_logistic(params, logistic, state), state);
    }
    return ode_rhs(params, state);
}

ContinuousState offset(const ContinuousState& base, const StateRate& k, double h)
{
    ContinuousState out = base;
    for (std::size_t i = 0; i < base.groups(); ++i) {
        out.s[i] += h * k.s[i];
        out.a[i] += h * k.a[i];
        out.dd[i] += h * k.dd[i];
    }
    out.t += h;
    return out;
}

TrajectorySample sample_of(const ContinuousState& state)
{
    return {state.t, state.s, state.a, state.dd};
}

} // namespace

void IntegrationConfig::validate() const
{
    if (!std::isfinite(step) || step <= 0.0) {
        throw DomainError("integration: step must be > 0");
    }
    if (!std::isfinite(horizon) || !std::isfinite(sample_every) || sample_every < step || sample_every > horizon) {
        throw DomainError("integration: need step <= sample_every <= horizon");
    }
    std::size_t ratio = 0;
    if (!is_integer_ratio(sample_every, step, ratio)) {
        throw DomainError("integration: sample_every must be an integer multiple of step");
    }
    if (!std::isfinite(extinction_threshold) || extinction_threshold <= 0.0) {
        throw DomainError("integration: extinction threshold must be > 0");
    }
}

std::size_t IntegrationConfig::steps_per_sample() const
{
    std::size_t ratio = 0;
    if (!is_integer_ratio(sample_every, step, ratio)) {
        throw DomainError("integration: sample_every must be an integer multiple of step");
    }
    return ratio;
}

std::size_t IntegrationConfig::total_steps() const
{
    return static_cast<std::size_t>(std::floor(horizon / step + 1e-9));
}

bool rk4_step(const ModelParams& params, const LogisticConfig& logistic, ContinuousState& state, double h)
{
    const StateRate k1 = rhs(params, logistic, state);
    const StateRate k2 = rhs(params, logistic, offset(state, k1, h / 2));
    const StateRate k3 = rhs(params, logistic, offset(state, k2, h / 2));
    const StateRate k4 = rhs(params, logistic, offset(state, k3, h));

    bool clamped = false;
    auto update  = [&](double& x, double a, double b, double c, double d) {
        x += h / 6.0 * (a + 2.0 * b + 2.0 * c + d);
        if (x < 0.0) {
            x       = 0.0;
            clamped = true;
        }
    };
    for (std::size_t i = 0; i < state.groups(); ++i) {
        update(state.s[i], k1.s[i], k2.s[i], k3.s[i], k4.s[i]);
        update(state.a[i], k1.a[i], k2.a[i], k3.a[i], k4.a[i]);
        update(state.dd[i], k1.dd[i], k2.dd[i], k3.dd[i], k4.dd[i]);
    }
    state.t += h;
    return clamped;
}

TrajectoryTable integrate(const ModelParams& params, const ContinuousState& init, const IntegrationConfig& cfg,
                          const LogisticConfig& logistic, IntegrationStats* stats)
{
    params.validate();
    cfg.validate();
    if (logistic.enabled) {
        logistic.validate();
    }
    if (init.s.size() != params.m || init.a.size() != params.m || init.dd.size() != params.m) {
        throw DomainError("integrate: initial state dimension does not match params.m");
    }
    for (const auto* v : {&init.s, &init.a, &init.dd}) {
        for (double x : *v) {
            if (!std::isfinite(x) || x < 0.0) {
                throw DomainError("integrate: initial populations must be finite and >= 0");
            }
        }
    }

    const std::size_t per_sample = cfg.steps_per_sample();
    const std::size_t n_steps    = cfg.total_steps();

    TrajectoryTable table;
    table.groups = params.m;
    table.samples.reserve(n_steps / per_sample + 1);

    ContinuousState state = init;
    state.t               = 0.0;
    table.samples.push_back(sample_of(state));

    IntegrationStats local;
    for (std::size_t k = 1; k <= n_steps; ++k) {
        if (rk4_step(params, logistic, state, cfg.step)) {
            ++local.clamped_steps;
        }
        ++local.steps;
        state.t = static_cast<double>(k) * cfg.step;
        if (!std::isfinite(state.total())) {
            throw NumericError("integrate: solution blew up at t = " + std::to_string(state.t), state.t);
        }
        if (k % per_sample == 0) {
            table.samples.push_back(sample_of(state));
        }
    }
    if (stats) {
        *stats = local;
    }
    if (local.clamped_fraction() > max_clamped_fraction) {
        throw NumericError("integrate: " + std::to_string(local.clamped_steps) + " of " +
                               std::to_string(local.steps) + " steps needed clamping; reduce the step",
                           state.t);
    }
    return table;
}

std::optional<double> extinction_time_deterministic(const TrajectoryTable& traj, double threshold)
{
    std::optional<double> time;
    for (const auto& sample : traj.samples) {
        if (sample.total_active() < threshold) {
            if (!time) {
                time = sample.t;
            }
        }
        else {
            time.reset();
        }
    }
    return time;
}

} // namespace infodiff
