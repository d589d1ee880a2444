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
// Reference computations that share no code with the library.
#ifndef INFODIFF_TESTS_ORACLES_HPP
#define INFODIFF_TESTS_ORACLES_HPP

#include "infodiff/matrix.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <vector>

namespace oracles
{

inline double eigen_spectral_radius(const infodiff::Matrix& k)
{
    Eigen::MatrixXd e(k.rows(), k.cols());
    for (std::size_t i = 0; i < k.rows(); ++i) {
        for (std::size_t j = 0; j < k.cols(); ++j) {
            e(i, j) = k(i, j);
        }
    }
    return e.eigenvalues().cwiseAbs().maxCoeff();
}

struct SD {
    double s;
    double d;
};

// stationary (S, D) of one group with no actives, by a direct 2x2 solve
inline SD dfe_linear_solve(double b, double d, double rho, double delta)
{
    Eigen::Matrix2d a;
    a << -(d + rho), delta, rho, -(d + delta);
    const Eigen::Vector2d x = a.colPivHouseholderQr().solve(Eigen::Vector2d(-b, 0.0));
    return {x(0), x(1)};
}

inline double linear_population(double b, double d, double n0, double t)
{
    return b / d + (n0 - b / d) * std::exp(-d * t);
}

inline double logistic_population(double rate, double capacity, double n0, double t)
{
    return capacity / (1.0 + (capacity / n0 - 1.0) * std::exp(-rate * t));
}

// Expected first time with no actives when actives only leave, one at a time,
// each at per-capita rate `exit_rate`. One event per epoch of length dt makes
// the wait at level k geometric with mean dt / (k exit_rate dt).
inline double pure_death_extinction_mean(long a0, double exit_rate)
{
    double t = 0.0;
    for (long k = 1; k <= a0; ++k) {
        t += 1.0 / (static_cast<double>(k) * exit_rate);
    }
    return t;
}

inline double pure_death_extinction_variance(long a0, double exit_rate, double dt)
{
    double v = 0.0;
    for (long k = 1; k <= a0; ++k) {
        const double p = static_cast<double>(k) * exit_rate * dt;
        v += dt * dt * (1.0 - p) / (p * p);
    }
    return v;
}

// Dense single-group paper-literal transition matrix built from the rate
// formulas directly. States (s, a) in lexicographic order.
struct DenseChain {
    long n;
    std::vector<std::pair<long, long>> states;
    Eigen::MatrixXd p;

    long index(long s, long a) const
    {
        for (std::size_t k = 0; k < states.size(); ++k) {
            if (states[k].first == s && states[k].second == a) {
                return static_cast<long>(k);
            }
        }
        return -1;
    }
};

inline DenseChain dense_chain(long n, double alpha, double eps, double gamma, double d, double rho, double delta,
                              double phi, double dt)
{
    DenseChain c{n, {}, {}};
    for (long s = 0; s <= n; ++s) {
        for (long a = 0; s + a <= n; ++a) {
            c.states.emplace_back(s, a);
        }
    }
    const auto size = static_cast<Eigen::Index>(c.states.size());
    c.p             = Eigen::MatrixXd::Zero(size, size);
    for (Eigen::Index j = 0; j < size; ++j) {
        const auto [s, a] = c.states[static_cast<std::size_t>(j)];
        const long dd     = n - s - a;
        const double up   = alpha * eps * gamma * static_cast<double>(a) / static_cast<double>(n) * s * dt;
        const double down = (phi + d) * a * dt;
        const double back = delta * dd * dt;
        const double out  = (d + rho) * s * dt;
        if (up > 0) {
            c.p(c.index(s - 1, a + 1), j) += up;
        }
        if (down > 0) {
            c.p(c.index(s, a - 1), j) += down;
        }
        if (back > 0) {
            c.p(c.index(s + 1, a), j) += back;
        }
        if (out > 0) {
            c.p(c.index(s - 1, a), j) += out;
        }
        c.p(j, j) += 1.0 - up - down - back - out;
    }
    return c;
}

} // namespace oracles

#endif // INFODIFF_TESTS_ORACLES_HPP
