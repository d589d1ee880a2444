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
#ifndef INFODIFF_MODEL_HPP
#define INFODIFF_MODEL_HPP

#include "infodiff/errors.hpp"
#include "infodiff/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace infodiff
{

/**
 * Rates and group structure of a Susceptible/Active/Deactivated scenario with
 * m groups per state.
 *
 * Group i susceptibles are activated by group j actives with per-capita force
 * alpha * eps[i] * gamma[j] * A_j / n_total. Births b[i] enter S_i; every
 * compartment of group i dies at per-capita rate d[i]. S_i withdraws to D_i at
 * rho[i], A_i deactivates to D_i at phi[i], D_i returns to S_i at delta[i].
 */
struct ModelParams {
    std::size_t m = 1;
    double n_total = 1.0;
    double alpha = 0.0;
    std::vector<double> b;
    std::vector<double> d;
    std::vector<double> rho;
    std::vector<double> delta;
    std::vector<double> phi;
    std::vector<double> eps;
    std::vector<double> gamma;

    /// All rate arrays sized m, zero rates, eps = gamma = 1.
    static ModelParams with_groups(std::size_t m, double n_total);

    /// Throws DomainError unless every array has length m and every entry is finite and >= 0, n_total > 0.
    void validate() const;

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Real-valued populations per group at time t.
struct ContinuousState {
    double t = 0.0;
    std::vector<double> s;
    std::vector<double> a;
    std::vector<double> dd;

    static ContinuousState zeros(std::size_t m, double t = 0.0);

    std::size_t groups() const
    {
        return s.size();
    }
    double total() const;
    double total_active() const;
    double group_total(std::size_t i) const
    {
        return s[i] + a[i] + dd[i];
    }

    friend bool operator==(const ContinuousState&, const ContinuousState&) = default;
};

/// Time derivative of a ContinuousState.
struct StateRate {
    std::vector<double> s;
    std::vector<double> a;
    std::vector<double> dd;

    double max_norm() const;
};

enum class EquilibriumKind
{
    disease_free,
    endemic
};

struct EquilibriumPoint {
    std::vector<double> s_star;
    std::vector<double> a_star;
    std::vector<double> d_star;
    EquilibriumKind kind = EquilibriumKind::disease_free;

    ContinuousState as_state() const;
};

/// Lambda[i][j] = alpha * eps_i * gamma_j * a_j / n_total.
Matrix force_of_activation(const ModelParams& params, std::span<const double> a);

/// Right-hand side of the S/A/D ODE system; activation moves mass S_i -> A_i.
StateRate ode_rhs(const ModelParams& params, const ContinuousState& state);

/**
 * Stationary point with no actives:
 * S*_i = b_i (d_i + delta_i) / (d_i (d_i + delta_i + rho_i)),
 * D*_i = b_i rho_i / (d_i (d_i + delta_i + rho_i)).
 * Throws DomainError if some d_i is zero.
 */
EquilibriumPoint disease_free_equilibrium(const ModelParams& params);

/// Thrown when a long integration fails to reach stationarity; carries the last state.
class ConvergenceError : public Error
{
public:
    ConvergenceError(const std::string& what, ContinuousState last_state)
        : Error(what)
        , last_state_(std::move(last_state))
    {
    }

    const ContinuousState& last_state() const
    {
        return last_state_;
    }

private:
    ContinuousState last_state_;
};

struct EndemicOptions {
    double step                 = 0.01;
    double horizon_cap          = 1.0e5;
    double tolerance            = 1e-9; // max-norm of ode_rhs
    double extinction_threshold = 1e-3; // sum of actives at or below this is disease free
};

/**
 * Integrates the ODE from seed_state until ode_rhs is stationary.
 *
 * A disease-free outcome returns disease_free_equilibrium() when every d_i > 0,
 * otherwise the reached state with the actives zeroed.
 */
EquilibriumPoint endemic_equilibrium(const ModelParams& params, const ContinuousState& seed_state,
                                     const EndemicOptions& options = {});

} // namespace infodiff

#endif // INFODIFF_MODEL_HPP
