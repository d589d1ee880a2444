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
#ifndef INFODIFF_THRESHOLD_HPP
#define INFODIFF_THRESHOLD_HPP

#include "infodiff/errors.hpp"
#include "infodiff/matrix.hpp"
#include "infodiff/model.hpp"

#include <cstddef>

namespace infodiff
{

/**
 * Next-generation decomposition at the disease-free equilibrium.
 *
 * f(i, j) = alpha eps_i gamma_j S*_i / n_total is the Jacobian of new
 * activations in A_i with respect to A_j; v is diagonal with d_i + phi_i;
 * k = f v^-1 and r0 its spectral radius.
 */
struct NextGenDecomposition {
    Matrix f;
    Matrix v;
    Matrix k;
    double r0 = 0.0;
};

NextGenDecomposition build_decomposition(const ModelParams& params);

struct PowerIterationOptions {
    double tolerance           = 1e-12; // relative change of successive estimates
    std::size_t max_iterations = 10000;
};

/// Power iteration failed; carries the last two eigenvalue estimates.
class PowerIterationError : public NumericError
{
public:
    PowerIterationError(const std::string& what, double previous, double last)
        : NumericError(what)
        , previous_(previous)
        , last_(last)
    {
    }

    double previous_estimate() const
    {
        return previous_;
    }
    double last_estimate() const
    {
        return last_;
    }

private:
    double previous_;
    double last_;
};

/**
 * Perron root of an entrywise nonnegative square matrix by power iteration
 * from the all-ones vector.
 *
 * Periodic (imprimitive) matrices make the plain iteration oscillate; after
 * max_iterations without convergence the iteration is repeated once on
 * k + sigma I (sigma = max row sum), whose Perron root is rho(k) + sigma.
 */
double spectral_radius(const Matrix& k, const PowerIterationOptions& options = {});

/// R0 as the trace of the rank-one next-generation matrix.
double r0_rank_one(const ModelParams& params);

/// alpha giving R0 = target_r0; R0 is linear in alpha. Throws DomainError if R0 vanishes at alpha = 1.
double calibrate_alpha(const ModelParams& params, double target_r0);

} // namespace infodiff

#endif // INFODIFF_THRESHOLD_HPP
