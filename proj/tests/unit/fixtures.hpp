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
#ifndef INFODIFF_TESTS_FIXTURES_HPP
#define INFODIFF_TESTS_FIXTURES_HPP

#include "infodiff/model.hpp"
#include "infodiff/dtmc.hpp"

#include <random>

namespace fixtures
{

// Reference two-group scenario, written out by hand.
inline infodiff::ModelParams table2(double alpha = 1.0)
{
    infodiff::ModelParams p;
    p.m       = 2;
    p.n_total = 100.0;
    p.alpha   = alpha;
    p.b       = {0.01, 0.01};
    p.d       = {0.01, 0.01};
    p.rho     = {0.2, 0.2};
    p.delta   = {0.03, 0.03};
    p.phi     = {0.03, 0.03};
    p.eps     = {0.4, 0.6};
    p.gamma   = {0.4, 0.7};
    return p;
}

inline infodiff::ContinuousState table2_state()
{
    infodiff::ContinuousState st;
    st.s  = {30.0, 42.0};
    st.a  = {20.0, 8.0};
    st.dd = {0.0, 0.0};
    return st;
}

inline infodiff::ModelParams single_group(double n_total)
{
    infodiff::ModelParams p = infodiff::ModelParams::with_groups(1, n_total);
    p.alpha                 = 1.0;
    p.b                     = {0.0};
    p.d                     = {0.01};
    p.rho                   = {0.2};
    p.delta                 = {0.03};
    p.phi                   = {0.03};
    p.eps                   = {0.4};
    p.gamma                 = {0.4};
    return p;
}

class Draws
{
public:
    explicit Draws(std::uint64_t seed)
        : gen_(seed)
    {
    }

    double uniform(double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }

    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
    }

    // strictly positive d and d + phi so that every derived quantity exists
    infodiff::ModelParams params(std::size_t m)
    {
        infodiff::ModelParams p = infodiff::ModelParams::with_groups(m, uniform(10.0, 1000.0));
        p.alpha                 = uniform(0.1, 50.0);
        for (std::size_t i = 0; i < m; ++i) {
            p.b[i]     = uniform(0.0, 2.0);
            p.d[i]     = uniform(0.001, 0.2);
            p.rho[i]   = uniform(0.0, 0.5);
            p.delta[i] = uniform(0.0, 0.5);
            p.phi[i]   = uniform(0.0, 0.5);
            p.eps[i]   = uniform(0.01, 1.0);
            p.gamma[i] = uniform(0.01, 1.0);
        }
        return p;
    }

    infodiff::ContinuousState state(std::size_t m, double scale)
    {
        infodiff::ContinuousState st = infodiff::ContinuousState::zeros(m);
        for (std::size_t i = 0; i < m; ++i) {
            st.s[i]  = uniform(0.0, scale);
            st.a[i]  = uniform(0.0, scale);
            st.dd[i] = uniform(0.0, scale);
        }
        return st;
    }

    // random split of `total` individuals over 3m compartments
    infodiff::DiscreteState discrete(std::size_t m, std::int64_t total)
    {
        infodiff::DiscreteState st{std::vector<std::int64_t>(m, 0), std::vector<std::int64_t>(m, 0),
                                   std::vector<std::int64_t>(m, 0)};
        for (std::int64_t k = 0; k < total; ++k) {
            const auto slot = static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(3 * m) - 1));
            auto& v         = slot < m ? st.s : slot < 2 * m ? st.a : st.dd;
            ++v[slot % m];
        }
        return st;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace fixtures

#endif // INFODIFF_TESTS_FIXTURES_HPP
