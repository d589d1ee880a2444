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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "infodiff/infodiff.h"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace
{

infodiff_scenario* load_table2()
{
    infodiff_scenario* s = nullptr;
    REQUIRE(infodiff_scenario_load("table2", &s) == INFODIFF_OK);
    REQUIRE(s != nullptr);
    return s;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("version and status names")
{
    CHECK(std::string(infodiff_version()) == "1.0.0");
    CHECK(std::string(infodiff_status_name(INFODIFF_ERR_STEP_SIZE)) == "step size error");
}

TEST_CASE("scenario lifecycle")
{
    infodiff_scenario* s = load_table2();
    CHECK(infodiff_scenario_groups(s) == 2);
    CHECK(std::string(infodiff_scenario_output(s)) == "out.csv");

    char* text = nullptr;
    REQUIRE(infodiff_scenario_render(s, &text) == INFODIFF_OK);
    infodiff_scenario* copy = nullptr;
    REQUIRE(infodiff_scenario_parse(text, &copy) == INFODIFF_OK);
    CHECK(infodiff_scenario_groups(copy) == 2);
    infodiff_string_free(text);
    infodiff_scenario_free(copy);

    CHECK(infodiff_scenario_set_replicas(s, 0) == INFODIFF_ERR_CONFIG);
    CHECK(std::string(infodiff_last_error()).find("replicas") != std::string::npos);
    CHECK(infodiff_scenario_set_horizon(s, -1.0) == INFODIFF_ERR_CONFIG);
    CHECK(infodiff_scenario_set_output(s, "") == INFODIFF_ERR_CONFIG);
    CHECK(infodiff_scenario_set_output(s, "x.csv") == INFODIFF_OK);
    CHECK(std::string(infodiff_scenario_output(s)) == "x.csv");
    CHECK(infodiff_scenario_set_seed(s, 99) == INFODIFF_OK);
    infodiff_scenario_free(s);
    infodiff_scenario_free(nullptr);
}

TEST_CASE("load and parse failures")
{
    infodiff_scenario* s = nullptr;
    CHECK(infodiff_scenario_load("/nonexistent.cfg", &s) == INFODIFF_ERR_CONFIG);
    CHECK(s == nullptr);
    CHECK(infodiff_scenario_parse("m = 2\n", &s) == INFODIFF_ERR_CONFIG);
    CHECK(std::string(infodiff_last_error()).find("n_total") != std::string::npos);
    CHECK(infodiff_scenario_parse(nullptr, &s) == INFODIFF_ERR_INVALID_ARGUMENT);
    CHECK(infodiff_scenario_load("table2", nullptr) == INFODIFF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("threshold calls")
{
    infodiff_scenario* s = load_table2();
    double r0 = 0.0, rank_one = 0.0;
    std::vector<double> f(4), v(4), k(4);
    REQUIRE(infodiff_r0(s, &r0, &rank_one, f.data(), v.data(), k.data()) == INFODIFF_OK);
    CHECK(r0 == doctest::Approx(0.58 / 24.0).epsilon(1e-12));
    CHECK(rank_one == doctest::Approx(r0).epsilon(1e-12));
    CHECK(v[0] == doctest::Approx(0.04));
    CHECK(v[1] == 0.0);
    CHECK(k[3] == doctest::Approx(0.6 * 0.7 / 600.0 / 0.04).epsilon(1e-12));
    CHECK(infodiff_r0(s, &r0, nullptr, nullptr, nullptr, nullptr) == INFODIFF_OK);

    double alpha = 0.0;
    REQUIRE(infodiff_calibrate_alpha(s, 1.4, &alpha) == INFODIFF_OK);
    CHECK(alpha == doctest::Approx(57.931).epsilon(1e-5));
    CHECK(infodiff_calibrate_alpha(s, -1.0, &alpha) == INFODIFF_ERR_DOMAIN);

    REQUIRE(infodiff_scenario_set_target_r0(s, 2.0) == INFODIFF_OK);
    REQUIRE(infodiff_scenario_effective_alpha(s, &alpha) == INFODIFF_OK);
    REQUIRE(infodiff_r0(s, &r0, nullptr, nullptr, nullptr, nullptr) == INFODIFF_OK);
    CHECK(r0 == doctest::Approx(2.0).epsilon(1e-12));
    REQUIRE(infodiff_scenario_set_target_r0(s, 0.0) == INFODIFF_OK);
    REQUIRE(infodiff_scenario_effective_alpha(s, &alpha) == INFODIFF_OK);
    CHECK(alpha == 1.0);
    infodiff_scenario_free(s);
}

TEST_CASE("runs and tables")
{
    infodiff_scenario* s = load_table2();
    REQUIRE(infodiff_scenario_set_horizon(s, 5.0) == INFODIFF_OK);
    REQUIRE(infodiff_scenario_set_replicas(s, 10) == INFODIFF_OK);

    infodiff_table* ode = nullptr;
    REQUIRE(infodiff_run_ode(s, &ode) == INFODIFF_OK);
    CHECK(infodiff_table_rows(ode) == 6);
    CHECK(infodiff_table_columns(ode) == 7);
    CHECK(std::string(infodiff_table_column_name(ode, 3)) == "A_1");
    CHECK(infodiff_table_column_name(ode, 7) == nullptr);
    CHECK(infodiff_table_value(ode, 0, 3) == 20.0);
    CHECK(std::isnan(infodiff_table_value(ode, 6, 0)));
    std::size_t index = 0;
    CHECK(infodiff_table_column_index(ode, "D_2", &index) == INFODIFF_OK);
    CHECK(index == 6);
    CHECK(infodiff_table_column_index(ode, "E_2", &index) == INFODIFF_ERR_INVALID_ARGUMENT);

    const std::string path = "capi_ode.csv";
    REQUIRE(infodiff_table_write_csv(ode, path.c_str()) == INFODIFF_OK);
    CHECK(slurp(path).rfind("time,S_1,S_2,A_1,A_2,D_1,D_2\n0,30,42,20,8,0,0\n", 0) == 0);
    std::remove(path.c_str());
    CHECK(infodiff_table_write_csv(ode, "/nonexistent-dir/x.csv") == INFODIFF_ERR_IO);
    infodiff_table_free(ode);

    infodiff_table* mc = nullptr;
    REQUIRE(infodiff_run_dtmc(s, &mc) == INFODIFF_OK);
    CHECK(infodiff_table_columns(mc) == 13);
    infodiff_table_free(mc);

    infodiff_table* cmp = nullptr;
    REQUIRE(infodiff_run_compare(s, &cmp) == INFODIFF_OK);
    CHECK(infodiff_table_columns(cmp) == 19);
    infodiff_table_free(cmp);

    const double r0_grid[] = {0.5, 1.5};
    infodiff_table* sweep  = nullptr;
    REQUIRE(infodiff_extinction_sweep(s, r0_grid, 2, &sweep) == INFODIFF_OK);
    CHECK(infodiff_table_rows(sweep) == 2);
    infodiff_table_free(sweep);
    CHECK(infodiff_extinction_sweep(s, r0_grid, 0, &sweep) == INFODIFF_ERR_CONFIG);

    const double k_grid[] = {100.0, 200.0};
    infodiff_table* summary = nullptr;
    infodiff_table* runs[2] = {nullptr, nullptr};
    REQUIRE(infodiff_logistic_sweep(s, k_grid, 2, &summary, runs) == INFODIFF_OK);
    CHECK(infodiff_table_rows(summary) == 2);
    CHECK(infodiff_table_columns(runs[1]) == 19);
    infodiff_table_free(summary);
    infodiff_table_free(runs[0]);
    infodiff_table_free(runs[1]);
    infodiff_scenario_free(s);
}

TEST_CASE("error classes reach the caller")
{
    infodiff_scenario* s = nullptr;
    REQUIRE(infodiff_scenario_parse("m = 1\nn_total = 10\ns0 = 5\na0 = 5\nalpha = 1000\nphi = 1\n"
                                    "dt = 1\nreplicas = 1\nhorizon = 2\n",
                                    &s) == INFODIFF_OK);
    infodiff_table* t = nullptr;
    CHECK(infodiff_run_dtmc(s, &t) == INFODIFF_ERR_STEP_SIZE);
    CHECK(t == nullptr);
    infodiff_scenario_free(s);

    REQUIRE(infodiff_scenario_parse("m = 1\nn_total = 10\ns0 = 5\na0 = 5\nmode = paper_literal\n"
                                    "logistic.enabled = true\nreplicas = 1\nhorizon = 2\n",
                                    &s) == INFODIFF_OK);
    CHECK(infodiff_run_dtmc(s, &t) == INFODIFF_ERR_UNSUPPORTED);
    infodiff_scenario_free(s);

    REQUIRE(infodiff_scenario_parse("m = 1\nn_total = 10\ns0 = 5\na0 = 5\ngamma = 0\n", &s) == INFODIFF_OK);
    double alpha = 0.0;
    CHECK(infodiff_calibrate_alpha(s, 1.0, &alpha) == INFODIFF_ERR_DOMAIN);
    infodiff_scenario_free(s);

    CHECK(infodiff_run_ode(nullptr, &t) == INFODIFF_ERR_INVALID_ARGUMENT);
}
