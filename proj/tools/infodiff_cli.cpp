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
/*
 * Command line front end over the C API.
 *
 * Exit codes: 0 success, 1 I/O or internal failure, 2 configuration or usage
 * error, 3 numerical failure (including a DTMC step that is too large).
 */
#include "infodiff/infodiff.h"

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

namespace
{

struct ScenarioDeleter {
    void operator()(infodiff_scenario* s) const
    {
        infodiff_scenario_free(s);
    }
};
struct TableDeleter {
    void operator()(infodiff_table* t) const
    {
        infodiff_table_free(t);
    }
};
using ScenarioPtr = std::unique_ptr<infodiff_scenario, ScenarioDeleter>;
using TablePtr    = std::unique_ptr<infodiff_table, TableDeleter>;

int exit_code(infodiff_status status)
{
    switch (status) {
    case INFODIFF_OK:
        return 0;
    case INFODIFF_ERR_INVALID_ARGUMENT:
    case INFODIFF_ERR_CONFIG:
    case INFODIFF_ERR_DOMAIN:
    case INFODIFF_ERR_UNSUPPORTED:
        return 2;
    case INFODIFF_ERR_NUMERIC:
    case INFODIFF_ERR_CONVERGENCE:
    case INFODIFF_ERR_STEP_SIZE:
        return 3;
    default:
        return 1;
    }
}

struct Failure {
    infodiff_status status;
};

void check(infodiff_status status)
{
    if (status != INFODIFF_OK) {
        throw Failure{status};
    }
}

std::string g(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

double value(const infodiff_table* t, std::size_t row, const char* column)
{
    std::size_t c = 0;
    check(infodiff_table_column_index(t, column, &c));
    return infodiff_table_value(t, row, c);
}

// path with `_K<capacity>` inserted before the extension
std::string capacity_path(const std::string& base, double capacity)
{
    const auto slash = base.find_last_of('/');
    const auto dot   = base.find_last_of('.');
    const bool ext   = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    const std::string stem = ext ? base.substr(0, dot) : base;
    return stem + "_K" + g(capacity) + (ext ? base.substr(dot) : "");
}

void print_matrix(const char* name, const std::vector<double>& m, std::size_t n)
{
    std::printf("%s =\n", name);
    for (std::size_t i = 0; i < n; ++i) {
        std::printf(" ");
        for (std::size_t j = 0; j < n; ++j) {
            std::printf(" %14.9g", m[i * n + j]);
        }
        std::printf("\n");
    }
}

double peak_total_active(const infodiff_table* t, std::size_t groups, const std::string& prefix, double* at)
{
    double peak = -1.0;
    for (std::size_t r = 0; r < infodiff_table_rows(t); ++r) {
        double total = 0.0;
        for (std::size_t i = 1; i <= groups; ++i) {
            total += value(t, r, (prefix + "A_" + std::to_string(i)).c_str());
        }
        if (total > peak) {
            peak = total;
            *at  = value(t, r, "time");
        }
    }
    return peak;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Information diffusion model: threshold, ODE and DTMC runs"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path = "table2";
    std::string out_path;
    std::uint64_t seed  = 0;
    std::size_t replicas = 0;
    double dt           = 0.0;
    double horizon      = 0.0;
    app.add_option("--config", config_path, "Scenario file, or 'table2' for the bundled scenario")
        ->capture_default_str();
    app.add_option("--out", out_path, "Output CSV path (overrides the scenario's output key)");
    auto* seed_opt     = app.add_option("--seed", seed, "Master RNG seed");
    auto* replicas_opt = app.add_option("--replicas", replicas, "Monte Carlo replicas")->check(CLI::PositiveNumber);
    auto* dt_opt       = app.add_option("--dt", dt, "DTMC step (0: automatic)")->check(CLI::NonNegativeNumber);
    auto* horizon_opt  = app.add_option("--horizon", horizon, "Final time")->check(CLI::PositiveNumber);

    auto* r0_cmd = app.add_subcommand("r0", "Basic reproduction number and next-generation matrices");

    double target = 0.0;
    auto* calibrate_cmd = app.add_subcommand("calibrate", "alpha that yields a target R0");
    calibrate_cmd->add_option("--target-r0", target, "Target R0")->required()->check(CLI::PositiveNumber);

    auto* ode_cmd     = app.add_subcommand("run-ode", "Deterministic trajectory");
    auto* dtmc_cmd    = app.add_subcommand("run-dtmc", "Monte Carlo mean of the DTMC");
    auto* compare_cmd = app.add_subcommand("compare", "Monte Carlo mean next to the deterministic trajectory");

    std::vector<double> r0_grid;
    auto* extinction_cmd = app.add_subcommand("extinction-sweep", "Extinction times over an R0 grid");
    extinction_cmd->add_option("--r0-grid", r0_grid, "Comma separated R0 values")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);

    std::vector<double> k_grid;
    auto* logistic_cmd = app.add_subcommand("logistic-sweep", "Logistic population runs over carrying capacities");
    logistic_cmd->add_option("--k-grid", k_grid, "Comma separated carrying capacities")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        infodiff_scenario* raw = nullptr;
        check(infodiff_scenario_load(config_path.c_str(), &raw));
        ScenarioPtr scenario(raw);
        infodiff_scenario* s = scenario.get();
        if (*seed_opt) {
            check(infodiff_scenario_set_seed(s, seed));
        }
        if (*replicas_opt) {
            check(infodiff_scenario_set_replicas(s, replicas));
        }
        if (*dt_opt) {
            check(infodiff_scenario_set_dt(s, dt));
        }
        if (*horizon_opt) {
            check(infodiff_scenario_set_horizon(s, horizon));
        }
        if (!out_path.empty()) {
            check(infodiff_scenario_set_output(s, out_path.c_str()));
        }
        const std::string output = infodiff_scenario_output(s);
        const std::size_t m      = infodiff_scenario_groups(s);

        if (*r0_cmd) {
            std::vector<double> f(m * m), v(m * m), k(m * m);
            double r0 = 0.0, rank_one = 0.0, alpha = 0.0;
            check(infodiff_scenario_effective_alpha(s, &alpha));
            check(infodiff_r0(s, &r0, &rank_one, f.data(), v.data(), k.data()));
            std::printf("R0 = %s (rank-one trace %s, alpha = %s)\n", g(r0).c_str(), g(rank_one).c_str(),
                        g(alpha).c_str());
            print_matrix("F", f, m);
            print_matrix("V", v, m);
            print_matrix("K", k, m);
        }
        else if (*calibrate_cmd) {
            double alpha = 0.0;
            check(infodiff_calibrate_alpha(s, target, &alpha));
            std::printf("alpha = %s for target R0 = %s\n", g(alpha).c_str(), g(target).c_str());
        }
        else if (*ode_cmd || *dtmc_cmd || *compare_cmd) {
            infodiff_table* raw_table = nullptr;
            const char* name          = *ode_cmd ? "run-ode" : *dtmc_cmd ? "run-dtmc" : "compare";
            check(*ode_cmd    ? infodiff_run_ode(s, &raw_table)
                  : *dtmc_cmd ? infodiff_run_dtmc(s, &raw_table)
                              : infodiff_run_compare(s, &raw_table));
            TablePtr table(raw_table);
            check(infodiff_table_write_csv(table.get(), output.c_str()));
            const std::size_t rows = infodiff_table_rows(table.get());
            double at              = 0.0;
            const double peak      = peak_total_active(table.get(), m, "", &at);
            std::printf("%s: %zu samples to t = %s, peak active %s at t = %s", name, rows,
                        g(value(table.get(), rows - 1, "time")).c_str(), g(peak).c_str(), g(at).c_str());
            if (*compare_cmd) {
                double ode_at       = 0.0;
                const double ode_pk = peak_total_active(table.get(), m, "ode_", &ode_at);
                std::printf(" (ODE %s at t = %s)", g(ode_pk).c_str(), g(ode_at).c_str());
            }
            std::printf(", wrote %s\n", output.c_str());
        }
        else if (*extinction_cmd) {
            infodiff_table* raw_table = nullptr;
            check(infodiff_extinction_sweep(s, r0_grid.data(), r0_grid.size(), &raw_table));
            TablePtr table(raw_table);
            check(infodiff_table_write_csv(table.get(), output.c_str()));
            for (std::size_t r = 0; r < infodiff_table_rows(table.get()); ++r) {
                const infodiff_table* t = table.get();
                std::printf("R0 = %s: alpha = %s, mean extinction time %s (sd %s, censored %s/%s), ODE %s\n",
                            g(value(t, r, "r0")).c_str(), g(value(t, r, "alpha")).c_str(),
                            g(value(t, r, "mean_extinction_time")).c_str(),
                            g(value(t, r, "sd_extinction_time")).c_str(), g(value(t, r, "censored")).c_str(),
                            g(value(t, r, "replicas")).c_str(), g(value(t, r, "ode_extinction_time")).c_str());
            }
            std::printf("wrote %s\n", output.c_str());
        }
        else if (*logistic_cmd) {
            infodiff_table* raw_summary = nullptr;
            std::vector<infodiff_table*> raw_runs(k_grid.size(), nullptr);
            check(infodiff_logistic_sweep(s, k_grid.data(), k_grid.size(), &raw_summary, raw_runs.data()));
            TablePtr summary(raw_summary);
            std::vector<TablePtr> runs;
            for (auto* t : raw_runs) {
                runs.emplace_back(t);
            }
            check(infodiff_table_write_csv(summary.get(), output.c_str()));
            for (std::size_t r = 0; r < k_grid.size(); ++r) {
                const std::string path = capacity_path(output, k_grid[r]);
                check(infodiff_table_write_csv(runs[r].get(), path.c_str()));
                double at = 0.0, ode_at = 0.0;
                const double peak     = peak_total_active(runs[r].get(), m, "", &at);
                const double ode_peak = peak_total_active(runs[r].get(), m, "ode_", &ode_at);
                std::printf("K = %s: peak active %s at t = %s (ODE %s at t = %s), wrote %s\n", g(k_grid[r]).c_str(),
                            g(peak).c_str(), g(at).c_str(), g(ode_peak).c_str(), g(ode_at).c_str(), path.c_str());
            }
            std::printf("wrote %s\n", output.c_str());
        }
    }
    catch (const Failure& f) {
        std::fprintf(stderr, "error: %s\n", infodiff_last_error());
        return exit_code(f.status);
    }
    return 0;
}
