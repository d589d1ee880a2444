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
#include "infodiff/errors.hpp"
#include "infodiff/experiments.hpp"
#include "infodiff/threshold.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace infodiff;

namespace
{

ScenarioConfig small_scenario()
{
    ScenarioConfig c                = load_config("table2");
    c.integration.horizon           = 10.0;
    c.dtmc.replicas                 = 20;
    return c;
}

} // namespace

TEST_CASE("automatic DTMC step")
{
    const ScenarioConfig c = small_scenario();
    for (double r0 : {0.5, 1.4, 4.9}) {
        ModelParams p = c.params;
        p.alpha       = calibrate_alpha(p, r0);
        const DtmcConfig cfg = dtmc_config(c, p);
        CHECK(cfg.dt <= max_stable_dt(p, population_cap(c), 1.0, c.integration.horizon) * (1 + 1e-12));
        CHECK(static_cast<double>(cfg.record_every) * cfg.dt == doctest::Approx(c.integration.sample_every));
    }
    ScenarioConfig fixed = c;
    fixed.dtmc.dt        = 0.25;
    const DtmcConfig cfg = dtmc_config(fixed, fixed.params);
    CHECK(cfg.dt == 0.25);
    CHECK(cfg.record_every == 4);
}

TEST_CASE("population cap")
{
    ScenarioConfig c = small_scenario();
    CHECK(population_cap(c) >= 100);
    c.dtmc.mode = ChainMode::paper_literal;
    CHECK(population_cap(c) == 100);
    c.dtmc.mode          = ChainMode::full;
    c.logistic.enabled   = true;
    c.logistic.capacity  = 300.0;
    CHECK(population_cap(c) == 600);
}

TEST_CASE("target R0 sets alpha")
{
    ScenarioConfig c = small_scenario();
    CHECK(effective_params(c).alpha == 1.0);
    c.target_r0 = 1.4;
    CHECK(build_decomposition(effective_params(c)).r0 == doctest::Approx(1.4).epsilon(1e-12));
}

TEST_CASE("runs")
{
    const ScenarioConfig c = small_scenario();
    const auto ode         = run_ode(c);
    CHECK(ode.rows() == 11);
    CHECK(ode.samples[0].a == std::vector<double>{20, 8});

    const auto mc = run_dtmc(c, 1);
    CHECK(mc.rows() == 11);
    CHECK(mc.has_spread());
    CHECK(mc.is_valid());

    const Comparison cmp = run_compare(c, 1);
    const auto table     = comparison_table(cmp.monte_carlo, cmp.ode);
    CHECK(table.header.size() == 1 + 6 + 6 + 6);

    ScenarioConfig fractional = c;
    fractional.s0             = {30.5, 41.5};
    CHECK_NOTHROW(run_ode(fractional));
    CHECK_THROWS_AS(run_dtmc(fractional, 1), ConfigError);
}

TEST_CASE("extinction sweep")
{
    ScenarioConfig c      = small_scenario();
    c.integration.horizon = 200.0;
    const std::vector<double> grid{0.5, 2.0};
    const Table t = extinction_sweep(c, grid, 1);
    CHECK(t.header == std::vector<std::string>{"r0", "alpha", "mean_extinction_time", "sd_extinction_time", "censored",
                                               "replicas", "ode_extinction_time"});
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0][0] == 0.5);
    CHECK(t.rows[1][1] == doctest::Approx(calibrate_alpha(c.params, 2.0)));
    CHECK(t.rows[0][5] == 20.0);
    CHECK_THROWS_AS(extinction_sweep(c, std::vector<double>{}, 1), ConfigError);
}

TEST_CASE("logistic sweep")
{
    ScenarioConfig c = small_scenario();
    c.target_r0      = 1.4;
    const std::vector<double> grid{100.0, 200.0};
    const LogisticSweep sweep = logistic_sweep(c, grid, 1);
    CHECK(sweep.summary.header ==
          std::vector<std::string>{"capacity", "ode_peak_A_1", "ode_peak_A_2", "mc_peak_A_1", "mc_peak_A_2"});
    REQUIRE(sweep.summary.rows.size() == 2);
    REQUIRE(sweep.runs.size() == 2);
    CHECK(sweep.summary.rows[1][0] == 200.0);
    CHECK(sweep.runs[0].ode.rows() == 11);
    CHECK_THROWS_AS(logistic_sweep(c, std::vector<double>{}, 1), ConfigError);
}
