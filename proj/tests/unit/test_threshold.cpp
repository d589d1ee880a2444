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
#include "fixtures.hpp"
#include "oracles.hpp"

#include "infodiff/errors.hpp"
#include "infodiff/integrator.hpp"
#include "infodiff/threshold.hpp"

#include <doctest.h>

#include <cmath>

using namespace infodiff;

namespace
{

Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows)
{
    Matrix k(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (double v : row) {
            k(i, j++) = v;
        }
        ++i;
    }
    return k;
}

} // namespace

TEST_CASE("spectral radius")
{
    CHECK(spectral_radius(Matrix::identity(3)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spectral_radius(from_rows({{2, 0}, {0, 3}})) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(spectral_radius(from_rows({{0.2, 0.3}, {0.4, 0.6}})) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(spectral_radius(Matrix(2, 2)) == 0.0);

    SUBCASE("periodic matrix")
    {
        CHECK(spectral_radius(from_rows({{0, 1}, {1, 0}})) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(spectral_radius(from_rows({{0, 2, 0}, {0, 0, 2}, {2, 0, 0}})) == doctest::Approx(2.0).epsilon(1e-10));
    }
    SUBCASE("agrees with a dense eigensolver")
    {
        fixtures::Draws draws(21);
        for (int k = 0; k < 100; ++k) {
            const auto n = static_cast<std::size_t>(draws.integer(1, 6));
            Matrix m(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    m(i, j) = draws.uniform(0.0, 3.0);
                }
            }
            CHECK(spectral_radius(m) == doctest::Approx(oracles::eigen_spectral_radius(m)).epsilon(1e-9));
        }
    }
    SUBCASE("rejects bad input")
    {
        CHECK_THROWS_AS(spectral_radius(from_rows({{1, -1}, {0, 1}})), DomainError);
        CHECK_THROWS_AS(spectral_radius(Matrix(2, 3)), DomainError);
    }
    SUBCASE("non-convergence carries the last estimates")
    {
        PowerIterationOptions opts;
        opts.max_iterations = 2;
        try {
            spectral_radius(from_rows({{1, 1, 0}, {0, 1, 1}, {0.3, 0, 1}}), opts);
            FAIL("expected PowerIterationError");
        }
        catch (const PowerIterationError& e) {
            CHECK(std::isfinite(e.previous_estimate()));
            CHECK(std::isfinite(e.last_estimate()));
            CHECK(e.previous_estimate() != e.last_estimate());
        }
    }
}

TEST_CASE("next-generation decomposition")
{
    SUBCASE("no transmission")
    {
        const auto dec = build_decomposition(fixtures::table2(0.0));
        CHECK(dec.f == Matrix(2, 2));
        CHECK(dec.k == Matrix(2, 2));
        CHECK(dec.r0 == 0.0);
    }
    SUBCASE("reference rates")
    {
        const auto dec = build_decomposition(fixtures::table2());
        CHECK(dec.r0 == doctest::Approx(0.58 / 24.0).epsilon(1e-12));
        CHECK(dec.v(0, 0) == doctest::Approx(0.04));
        CHECK(dec.v(0, 1) == 0.0);
        CHECK(dec.f(1, 0) == doctest::Approx(0.6 * 0.4 / 600.0).epsilon(1e-13));
        CHECK(r0_rank_one(fixtures::table2()) == doctest::Approx(0.0241666667).epsilon(1e-9));
    }
    SUBCASE("single group")
    {
        fixtures::Draws draws(22);
        for (int k = 0; k < 20; ++k) {
            const ModelParams p = draws.params(1);
            const double s_star = p.b[0] * (p.d[0] + p.delta[0]) / (p.d[0] * (p.d[0] + p.delta[0] + p.rho[0]));
            const double expected =
                p.alpha * p.eps[0] * p.gamma[0] * s_star / (p.n_total * (p.d[0] + p.phi[0]));
            CHECK(build_decomposition(p).r0 == doctest::Approx(expected).epsilon(1e-12));
        }
    }
    SUBCASE("threshold boundary by construction")
    {
        ModelParams p  = ModelParams::with_groups(1, 50.0);
        p.b            = {1.0};
        p.d            = {0.1};
        p.phi          = {0.15};
        p.eps          = {0.5};
        p.gamma        = {0.8};
        const double s = 10.0; // b / d with rho = delta = 0
        p.alpha        = p.n_total * (p.d[0] + p.phi[0]) / (p.eps[0] * p.gamma[0] * s);
        CHECK(r0_rank_one(p) == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("rank-one trace equals the spectral radius")
    {
        fixtures::Draws draws(23);
        for (int k = 0; k < 100; ++k) {
            const ModelParams p = draws.params(static_cast<std::size_t>(draws.integer(1, 5)));
            const auto dec      = build_decomposition(p);
            CHECK(std::abs(r0_rank_one(p) - dec.r0) <= 1e-10 * std::max(1.0, dec.r0));
            CHECK(dec.r0 == doctest::Approx(oracles::eigen_spectral_radius(dec.k)).epsilon(1e-9));
        }
    }
    SUBCASE("infinite activity period")
    {
        ModelParams p = fixtures::table2();
        p.phi[1]      = 0.0;
        p.d[1]        = 0.0;
        CHECK_THROWS_AS(build_decomposition(p), DomainError);
    }
    SUBCASE("monotone in alpha and gamma")
    {
        fixtures::Draws draws(24);
        for (int k = 0; k < 30; ++k) {
            const ModelParams p = draws.params(3);
            const double base   = build_decomposition(p).r0;
            ModelParams q       = p;
            q.alpha *= 1.01;
            CHECK(build_decomposition(q).r0 > base);
            for (std::size_t j = 0; j < 3; ++j) {
                q = p;
                q.gamma[j] += 0.01;
                CHECK(build_decomposition(q).r0 > base);
            }
        }
    }
}

TEST_CASE("alpha calibration")
{
    const ModelParams p = fixtures::table2();
    CHECK(calibrate_alpha(p, 1.4) == doctest::Approx(1.4 / (0.58 / 24.0)).epsilon(1e-12));
    CHECK(calibrate_alpha(p, 1.4) == doctest::Approx(57.931).epsilon(1e-5));

    ModelParams q = fixtures::table2(3.7);
    CHECK(calibrate_alpha(q, build_decomposition(q).r0) == doctest::Approx(3.7).epsilon(1e-12));
    CHECK(calibrate_alpha(p, 2.8) == doctest::Approx(2.0 * calibrate_alpha(p, 1.4)).epsilon(1e-15));

    q       = p;
    q.alpha = calibrate_alpha(p, 1.4);
    CHECK(build_decomposition(q).r0 == doctest::Approx(1.4).epsilon(1e-12));

    q       = p;
    q.gamma = {0.0, 0.0};
    CHECK_THROWS_AS(calibrate_alpha(q, 1.4), DomainError);
    CHECK_THROWS_AS(calibrate_alpha(p, 0.0), DomainError);
}

TEST_CASE("threshold dichotomy from a small seed")
{
    const ModelParams base = fixtures::table2();
    const auto dfe         = disease_free_equilibrium(base);
    ContinuousState seed   = dfe.as_state();
    for (std::size_t i = 0; i < 2; ++i) {
        seed.a[i] = 1e-3 * dfe.s_star[i];
    }
    IntegrationConfig cfg;
    cfg.step         = 0.01;
    cfg.sample_every = 0.01;
    cfg.horizon      = 0.01;
    for (double r0 : {0.9, 1.1}) {
        ModelParams p        = base;
        p.alpha              = calibrate_alpha(base, r0);
        const auto traj      = integrate(p, seed, cfg);
        const double change = traj.samples[1].total_active() - traj.samples[0].total_active();
        CAPTURE(r0);
        CHECK((r0 < 1.0 ? change < 0.0 : change > 0.0));
    }
}
