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
#include "infodiff/model.hpp"
#include "infodiff/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace infodiff
{

namespace
{

void check_rate_array(const std::vector<double>& values, std::size_t m, const char* name)
{
    if (values.size() != m) {
        throw DomainError(std::string("ModelParams: ") + name + " has " + std::to_string(values.size()) +
                          " entries, expected " + std::to_string(m));
    }
    for (double v : values) {
        if (!std::isfinite(v) || v < 0.0) {
            throw DomainError(std::string("ModelParams: ") + name + " entries must be finite and >= 0");
        }
    }
}

void check_state_dims(const ModelParams& params, const ContinuousState& state)
{
    if (state.s.size() != params.m || state.a.size() != params.m || state.dd.size() != params.m) {
        throw DomainError("state has " + std::to_string(state.s.size()) + "/" + std::to_string(state.a.size()) +
                          "/" + std::to_string(state.dd.size()) + " groups, params expect " +
                          std::to_string(params.m));
    }
}

} // namespace

ModelParams ModelParams::with_groups(std::size_t m, double n_total)
{
    ModelParams p;
    p.m       = m;
    p.n_total = n_total;
    p.alpha   = 0.0;
    p.b.assign(m, 0.0);
    p.d.assign(m, 0.0);
    p.rho.assign(m, 0.0);
    p.delta.assign(m, 0.0);
    p.phi.assign(m, 0.0);
    p.eps.assign(m, 1.0);
    p.gamma.assign(m, 1.0);
    return p;
}

void ModelParams::validate() const
{
    if (m == 0) {
        throw DomainError("ModelParams: m must be positive");
    }
    if (!std::isfinite(n_total) || n_total <= 0.0) {
        throw DomainError("ModelParams: n_total must be finite and > 0");
    }
    if (!std::isfinite(alpha) || alpha < 0.0) {
        throw DomainError("ModelParams: alpha must be finite and >= 0");
    }
    check_rate_array(b, m, "b");
    check_rate_array(d, m, "d");
    check_rate_array(rho, m, "rho");
    check_rate_array(delta, m, "delta");
    check_rate_array(phi, m, "phi");
    check_rate_array(eps, m, "eps");
    check_rate_array(gamma, m, "gamma");
}

ContinuousState ContinuousState::zeros(std::size_t m, double t)
{
    ContinuousState st;
    st.t = t;
    st.s.assign(m, 0.0);
    st.a.assign(m, 0.0);
    st.dd.assign(m, 0.0);
    return st;
}

double ContinuousState::total() const
{
    return std::accumulate(s.begin(), s.end(), 0.0) + std::accumulate(a.begin(), a.end(), 0.0) +
           std::accumulate(dd.begin(), dd.end(), 0.0);
}

double ContinuousState::total_active() const
{
    return std::accumulate(a.begin(), a.end(), 0.0);
}

double StateRate::max_norm() const
{
    double norm = 0.0;
    for (const auto* v : {&s, &a, &dd}) {
        for (double x : *v) {
            norm = std::max(norm, std::abs(x));
        }
    }
    return norm;
}

ContinuousState EquilibriumPoint::as_state() const
{
    ContinuousState st;
    st.s  = s_star;
    st.a  = a_star;
    st.dd = d_star;
    return st;
}

Matrix force_of_activation(const ModelParams& params, std::span<const double> a)
{
    params.validate();
    if (a.size() != params.m) {
        throw DomainError("force_of_activation: active vector has wrong length");
    }
    for (double x : a) {
        if (!std::isfinite(x) || x < 0.0) {
            throw DomainError("force_of_activation: active counts must be finite and >= 0");
        }
    }
    Matrix lambda(params.m, params.m);
    for (std::size_t i = 0; i < params.m; ++i) {
        for (std::size_t j = 0; j < params.m; ++j) {
            lambda(i, j) = params.alpha * params.eps[i] * params.gamma[j] * a[j] / params.n_total;
        }
    }
    return lambda;
}

StateRate ode_rhs(const ModelParams& params, const ContinuousState& state)
{
    check_state_dims(params, state);
    const std::size_t m = params.m;

    // sum_j lambda_ij = eps_i * pressure
    double weighted_active = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        weighted_active += params.gamma[j] * state.a[j];
    }
    const double pressure = params.alpha * weighted_active / params.n_total;

    StateRate rate{std::vector<double>(m), std::vector<double>(m), std::vector<double>(m)};
    for (std::size_t i = 0; i < m; ++i) {
        const double s  = state.s[i];
        const double a  = state.a[i];
        const double dd = state.dd[i];
        const double activation = params.eps[i] * pressure * s;
        rate.s[i]  = params.b[i] - activation - (params.d[i] + params.rho[i]) * s + params.delta[i] * dd;
        rate.a[i]  = activation - (params.d[i] + params.phi[i]) * a;
        rate.dd[i] = params.phi[i] * a + params.rho[i] * s - (params.d[i] + params.delta[i]) * dd;
    }
    return rate;
}

EquilibriumPoint disease_free_equilibrium(const ModelParams& params)
{
    params.validate();
    EquilibriumPoint eq;
    eq.kind = EquilibriumKind::disease_free;
    eq.s_star.resize(params.m);
    eq.a_star.assign(params.m, 0.0);
    eq.d_star.resize(params.m);
    for (std::size_t i = 0; i < params.m; ++i) {
        const double d = params.d[i];
        if (d <= 0.0) {
            throw DomainError("disease_free_equilibrium: death rate of group " + std::to_string(i + 1) +
                              " is zero, the equilibrium is undefined");
        }
        const double denom = d * (d + params.delta[i] + params.rho[i]);
        eq.s_star[i] = params.b[i] * (d + params.delta[i]) / denom;
        eq.d_star[i] = params.b[i] * params.rho[i] / denom;
    }
    return eq;
}

EquilibriumPoint endemic_equilibrium(const ModelParams& params, const ContinuousState& seed_state,
                                     const EndemicOptions& options)
{
    params.validate();
    check_state_dims(params, seed_state);
    if (!(seed_state.total_active() > 0.0)) {
        throw DomainError("endemic_equilibrium: seed state needs a positive number of actives");
    }
    if (!(options.step > 0.0) || !(options.horizon_cap > 0.0)) {
        throw DomainError("endemic_equilibrium: step and horizon cap must be positive");
    }

    const LogisticConfig no_logistic{};
    ContinuousState state = seed_state;
    state.t               = 0.0;
    const auto max_steps  = static_cast<std::size_t>(std::ceil(options.horizon_cap / options.step));
    bool stationary       = ode_rhs(params, state).max_norm() < options.tolerance;
    for (std::size_t k = 1; k <= max_steps && !stationary; ++k) {
        rk4_step(params, no_logistic, state, options.step);
        state.t = static_cast<double>(k) * options.step;
        if (!std::isfinite(state.total())) {
            throw NumericError("endemic_equilibrium: non-finite state", state.t);
        }
        stationary = ode_rhs(params, state).max_norm() < options.tolerance;
    }
    if (!stationary) {
        throw ConvergenceError("endemic_equilibrium: no stationary point within the horizon cap", state);
    }

    if (state.total_active() > options.extinction_threshold) {
        return {state.s, state.a, state.dd, EquilibriumKind::endemic};
    }
    const bool dfe_defined = std::all_of(params.d.begin(), params.d.end(), [](double d) {
        return d > 0.0;
    });
    if (dfe_defined) {
        return disease_free_equilibrium(params);
    }
    return {state.s, std::vector<double>(params.m, 0.0), state.dd, EquilibriumKind::disease_free};
}

} // namespace infodiff
