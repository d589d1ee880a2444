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
#ifndef INFODIFF_EXACT_HPP
#define INFODIFF_EXACT_HPP

#include "infodiff/dtmc.hpp"
#include "infodiff/model.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace infodiff
{

/**
 * Transition kernel of the single-group paper-literal chain on the states
 * (s, a) with s + a <= N, d = N - s - a, enumerated in lexicographic (s, a)
 * order. Column j lists the at most five destinations of state j.
 */
class ExactKernel
{
public:
    struct Entry {
        std::size_t row;
        double probability;
    };

    /// Throws UnsupportedModeError if params.m != 1, StepSizeError if dt is too large for some state.
    ExactKernel(const ModelParams& params, std::int64_t population, double dt);

    std::int64_t population() const
    {
        return population_;
    }
    std::size_t size() const
    {
        return columns_.size();
    }
    std::size_t index(std::int64_t s, std::int64_t a) const;
    DiscreteState state(std::size_t index) const;
    const std::vector<Entry>& column(std::size_t j) const
    {
        return columns_[j];
    }

    /// p(t + dt) = P p(t).
    std::vector<double> step(const std::vector<double>& p) const;
    std::vector<double> point_mass(const DiscreteState& state) const;

private:
    std::int64_t population_;
    std::vector<DiscreteState> states_;
    std::vector<std::vector<Entry>> columns_;
};

struct ExactPropagation {
    std::vector<double> distribution; // after n_steps, ExactKernel order
    std::vector<double> expected_s;   // n_steps + 1 entries
    std::vector<double> expected_a;
    std::vector<double> expected_d;
    std::vector<double> mass;         // sum of the probability vector after each step
};

/// Expected counts under a distribution in kernel order.
void expected_counts(const ExactKernel& kernel, const std::vector<double>& p, double& s, double& a, double& d);

/// Propagates a point mass at `init` for n_steps. The population is init.total(), which must equal n_total.
ExactPropagation exact_propagation(const ModelParams& params, const DiscreteState& init, double dt,
                                   std::size_t n_steps);

} // namespace infodiff

#endif // INFODIFF_EXACT_HPP
