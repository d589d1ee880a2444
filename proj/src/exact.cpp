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
#include "infodiff/exact.hpp"

#include <cmath>

namespace infodiff
{

ExactKernel::ExactKernel(const ModelParams& params, std::int64_t population, double dt)
    : population_(population)
{
    if (params.m != 1) {
        throw UnsupportedModeError("exact propagation is limited to a single group (m = 1); use Monte Carlo");
    }
    if (population < 0) {
        throw DomainError("exact propagation: population must be >= 0");
    }
    const std::int64_t n = population;
    for (std::int64_t s = 0; s <= n; ++s) {
        for (std::int64_t a = 0; s + a <= n; ++a) {
            states_.push_back(DiscreteState{{s}, {a}, {n - s - a}});
        }
    }
    columns_.resize(states_.size());
    for (std::size_t j = 0; j < states_.size(); ++j) {
        const DiscreteState& from   = states_[j];
        const TransitionTable table = event_probabilities(params, from, dt, ChainMode::paper_literal);
        for (const auto& [kind, p] : table.entries) {
            if (p == 0.0) {
                continue;
            }
            DiscreteState to = from;
            apply_event(to, kind);
            columns_[j].push_back({index(to.s[0], to.a[0]), p});
        }
    }
}

std::size_t ExactKernel::index(std::int64_t s, std::int64_t a) const
{
    if (s < 0 || a < 0 || s + a > population_) {
        throw DomainError("exact propagation: state outside the state space");
    }
    // states with first coordinate s' < s: sum_{s'<s} (N - s' + 1)
    const std::int64_t n      = population_;
    const std::int64_t offset = s * (n + 1) - s * (s - 1) / 2;
    return static_cast<std::size_t>(offset + a);
}

DiscreteState ExactKernel::state(std::size_t index) const
{
    return states_.at(index);
}

std::vector<double> ExactKernel::step(const std::vector<double>& p) const
{
    if (p.size() != columns_.size()) {
        throw DomainError("exact propagation: probability vector has wrong size");
    }
    std::vector<double> q(p.size(), 0.0);
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (p[j] == 0.0) {
            continue;
        }
        for (const Entry& e : columns_[j]) {
            q[e.row] += e.probability * p[j];
        }
    }
    return q;
}

std::vector<double> ExactKernel::point_mass(const DiscreteState& st) const
{
    if (st.groups() != 1 || st.total() != population_) {
        throw DomainError("exact propagation: initial state must be a single group summing to the population");
    }
    std::vector<double> p(size(), 0.0);
    p[index(st.s[0], st.a[0])] = 1.0;
    return p;
}

void expected_counts(const ExactKernel& kernel, const std::vector<double>& p, double& s, double& a, double& d)
{
    s = a = d = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        const DiscreteState st = kernel.state(j);
        s += static_cast<double>(st.s[0]) * p[j];
        a += static_cast<double>(st.a[0]) * p[j];
        d += static_cast<double>(st.dd[0]) * p[j];
    }
}

ExactPropagation exact_propagation(const ModelParams& params, const DiscreteState& init, double dt,
                                   std::size_t n_steps)
{
    params.validate();
    if (params.m != 1) {
        throw UnsupportedModeError("exact propagation is limited to a single group (m = 1); use Monte Carlo");
    }
    if (std::abs(static_cast<double>(init.total()) - params.n_total) > 1e-9) {
        throw DomainError("exact propagation: initial counts must sum to n_total");
    }
    const ExactKernel kernel(params, init.total(), dt);

    ExactPropagation out;
    out.distribution = kernel.point_mass(init);
    auto record      = [&](const std::vector<double>& p) {
        double s = 0.0, a = 0.0, d = 0.0, mass = 0.0;
        expected_counts(kernel, p, s, a, d);
        for (double x : p) {
            mass += x;
        }
        out.expected_s.push_back(s);
        out.expected_a.push_back(a);
        out.expected_d.push_back(d);
        out.mass.push_back(mass);
    };
    record(out.distribution);
    for (std::size_t k = 0; k < n_steps; ++k) {
        out.distribution = kernel.step(out.distribution);
        record(out.distribution);
    }
    return out;
}

} // namespace infodiff
