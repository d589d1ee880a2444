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
#include "infodiff/threshold.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

namespace infodiff
{

namespace
{

void check_transfer_rates(const ModelParams& params)
{
    for (std::size_t i = 0; i < params.m; ++i) {
        if (!(params.d[i] + params.phi[i] > 0.0)) {
            throw DomainError("next-generation matrix: d + phi is zero for group " + std::to_string(i + 1) +
                              " (infinite active period)");
        }
    }
}

struct IterationResult {
    std::optional<double> radius;
    double previous = 0.0;
    double last     = 0.0;
};

// Power iteration on k + shift * I with L1-normalised iterates. For a
// nonnegative iterate x with |x|_1 = 1 the estimate |(k + shift I) x|_1
// tends to the Perron root. The estimates converge geometrically, so the
// remaining error is about change * q / (1 - q) with q the ratio of
// successive changes; iteration stops once that falls below the tolerance.
IterationResult power_iterate(const Matrix& k, double shift, const PowerIterationOptions& options)
{
    const std::size_t n = k.rows();
    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    std::vector<double> y(n);
    IterationResult result;
    double previous = -1.0;
    // ratios of successive steps over the last few iterations; complex
    // subdominant eigenvalues make single ratios oscillate
    std::array<double, 8> ratios{};
    std::size_t settled  = 0;
    std::size_t n_ratios = 0;
    double previous_step = -1.0;
    for (std::size_t it = 0; it < options.max_iterations; ++it) {
        double norm = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            double acc = shift * x[r];
            for (std::size_t c = 0; c < n; ++c) {
                acc += k(r, c) * x[c];
            }
            y[r] = acc;
            norm += acc;
        }
        result.previous = previous;
        result.last     = norm;
        if (norm == 0.0) {
            // k^j applied to a positive vector vanished: k is nilpotent
            result.radius = 0.0;
            return result;
        }
        if (previous >= 0.0) {
            const double step = std::abs(norm - previous);
            // at rounding level the ratio of successive steps is noise
            if (step <= 8.0 * std::numeric_limits<double>::epsilon() * norm) {
                result.radius = norm;
                return result;
            }
            if (previous_step > 0.0) {
                ratios[n_ratios % ratios.size()] = step / previous_step;
                ++n_ratios;
            }
            if (n_ratios >= ratios.size()) {
                const double q = *std::max_element(ratios.begin(), ratios.end());
                settled = (q < 1.0 && step * q / (1.0 - q) <= options.tolerance * norm) ? settled + 1 : 0;
                if (settled == 3) {
                    result.radius = norm;
                    return result;
                }
            }
            previous_step = step;
        }
        for (std::size_t r = 0; r < n; ++r) {
            x[r] = y[r] / norm;
        }
        previous = norm;
    }
    return result;
}

} // namespace

NextGenDecomposition build_decomposition(const ModelParams& params)
{
    params.validate();
    check_transfer_rates(params);
    const EquilibriumPoint dfe = disease_free_equilibrium(params);
    const std::size_t m        = params.m;

    NextGenDecomposition out{Matrix(m, m), Matrix(m, m), Matrix(m, m), 0.0};
    for (std::size_t i = 0; i < m; ++i) {
        out.v(i, i) = params.d[i] + params.phi[i];
        for (std::size_t j = 0; j < m; ++j) {
            out.f(i, j) = params.alpha * params.eps[i] * params.gamma[j] * dfe.s_star[i] / params.n_total;
        }
    }
    // v is diagonal, so f v^-1 scales column j by 1 / v_jj
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            out.k(i, j) = out.f(i, j) / out.v(j, j);
        }
    }
    out.r0 = spectral_radius(out.k);
    return out;
}

double spectral_radius(const Matrix& k, const PowerIterationOptions& options)
{
    if (!k.is_square() || k.rows() == 0) {
        throw DomainError("spectral_radius: matrix must be square and non-empty");
    }
    if (!k.all_finite() || !k.all_nonnegative()) {
        throw DomainError("spectral_radius: matrix must be finite and entrywise nonnegative");
    }

    IterationResult plain = power_iterate(k, 0.0, options);
    if (plain.radius) {
        return *plain.radius;
    }

    double shift = 0.0;
    for (std::size_t r = 0; r < k.rows(); ++r) {
        const auto row = k.row(r);
        shift          = std::max(shift, std::accumulate(row.begin(), row.end(), 0.0));
    }
    IterationResult shifted = power_iterate(k, shift, options);
    if (shifted.radius) {
        return std::max(0.0, *shifted.radius - shift);
    }
    throw PowerIterationError("spectral_radius: power iteration did not converge in " +
                                  std::to_string(options.max_iterations) + " iterations",
                              plain.previous, plain.last);
}

double r0_rank_one(const ModelParams& params)
{
    params.validate();
    check_transfer_rates(params);
    const EquilibriumPoint dfe = disease_free_equilibrium(params);
    double r0                  = 0.0;
    for (std::size_t i = 0; i < params.m; ++i) {
        r0 += params.alpha * params.eps[i] * params.gamma[i] * dfe.s_star[i] /
              (params.n_total * (params.d[i] + params.phi[i]));
    }
    return r0;
}

double calibrate_alpha(const ModelParams& params, double target_r0)
{
    if (!std::isfinite(target_r0) || target_r0 <= 0.0) {
        throw DomainError("calibrate_alpha: target R0 must be finite and > 0");
    }
    ModelParams unit = params;
    unit.alpha       = 1.0;
    const double r1  = build_decomposition(unit).r0;
    if (!(r1 > 0.0)) {
        throw DomainError("calibrate_alpha: R0 vanishes at alpha = 1, no alpha reaches the target");
    }
    return target_r0 / r1;
}

} // namespace infodiff
