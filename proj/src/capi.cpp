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
#include "infodiff/infodiff.h"
#include "infodiff/experiments.hpp"
#include "infodiff/threshold.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <string>

struct infodiff_scenario {
    infodiff::ScenarioConfig config;
};

struct infodiff_table {
    infodiff::Table table;
};

namespace
{

thread_local std::string last_error;

infodiff_status fail(infodiff_status status, const char* what)
{
    last_error = what;
    return status;
}

template <class F>
infodiff_status guarded(F&& body)
{
    try {
        body();
        return INFODIFF_OK;
    }
    catch (const infodiff::ConfigError& e) {
        return fail(INFODIFF_ERR_CONFIG, e.what());
    }
    catch (const infodiff::DomainError& e) {
        return fail(INFODIFF_ERR_DOMAIN, e.what());
    }
    catch (const infodiff::NumericError& e) {
        return fail(INFODIFF_ERR_NUMERIC, e.what());
    }
    catch (const infodiff::ConvergenceError& e) {
        return fail(INFODIFF_ERR_CONVERGENCE, e.what());
    }
    catch (const infodiff::StepSizeError& e) {
        return fail(INFODIFF_ERR_STEP_SIZE, e.what());
    }
    catch (const infodiff::UnsupportedModeError& e) {
        return fail(INFODIFF_ERR_UNSUPPORTED, e.what());
    }
    catch (const infodiff::IoError& e) {
        return fail(INFODIFF_ERR_IO, e.what());
    }
    catch (const std::bad_alloc&) {
        return fail(INFODIFF_ERR_INTERNAL, "out of memory");
    }
    catch (const std::exception& e) {
        return fail(INFODIFF_ERR_INTERNAL, e.what());
    }
    catch (...) {
        return fail(INFODIFF_ERR_INTERNAL, "unknown error");
    }
}

infodiff_status null_argument(const char* name)
{
    return fail(INFODIFF_ERR_INVALID_ARGUMENT, (std::string(name) + " is null").c_str());
}

// applies `change` to a copy and keeps it only if the result validates
template <class F>
infodiff_status modify(infodiff_scenario* scenario, F&& change)
{
    if (!scenario) {
        return null_argument("scenario");
    }
    return guarded([&] {
        infodiff::ScenarioConfig updated = scenario->config;
        change(updated);
        updated.validate();
        scenario->config = std::move(updated);
    });
}

infodiff_table* wrap(infodiff::Table table)
{
    return new infodiff_table{std::move(table)};
}

void copy_matrix(const infodiff::Matrix& m, double* out)
{
    if (out) {
        std::memcpy(out, m.data().data(), m.rows() * m.cols() * sizeof(double));
    }
}

} // namespace

extern "C" {

const char* infodiff_version(void)
{
    return "1.0.0";
}

const char* infodiff_last_error(void)
{
    return last_error.c_str();
}

const char* infodiff_status_name(infodiff_status status)
{
    switch (status) {
    case INFODIFF_OK:
        return "ok";
    case INFODIFF_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case INFODIFF_ERR_CONFIG:
        return "configuration error";
    case INFODIFF_ERR_DOMAIN:
        return "domain error";
    case INFODIFF_ERR_NUMERIC:
        return "numeric error";
    case INFODIFF_ERR_CONVERGENCE:
        return "convergence error";
    case INFODIFF_ERR_STEP_SIZE:
        return "step size error";
    case INFODIFF_ERR_UNSUPPORTED:
        return "unsupported mode";
    case INFODIFF_ERR_IO:
        return "i/o error";
    case INFODIFF_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

infodiff_status infodiff_scenario_load(const char* path_or_name, infodiff_scenario** out)
{
    if (!path_or_name) {
        return null_argument("path_or_name");
    }
    if (!out) {
        return null_argument("out");
    }
    return guarded([&] {
        *out = new infodiff_scenario{infodiff::load_config(path_or_name)};
    });
}

infodiff_status infodiff_scenario_parse(const char* text, infodiff_scenario** out)
{
    if (!text) {
        return null_argument("text");
    }
    if (!out) {
        return null_argument("out");
    }
    return guarded([&] {
        *out = new infodiff_scenario{infodiff::parse_config(text)};
    });
}

void infodiff_scenario_free(infodiff_scenario* scenario)
{
    delete scenario;
}

infodiff_status infodiff_scenario_render(const infodiff_scenario* scenario, char** text)
{
    if (!scenario) {
        return null_argument("scenario");
    }
    if (!text) {
        return null_argument("text");
    }
    return guarded([&] {
        const std::string rendered = infodiff::render_config(scenario->config);
        auto buffer                = std::make_unique<char[]>(rendered.size() + 1);
        std::memcpy(buffer.get(), rendered.c_str(), rendered.size() + 1);
        *text = buffer.release();
    });
}

void infodiff_string_free(char* text)
{
    delete[] text;
}

size_t infodiff_scenario_groups(const infodiff_scenario* scenario)
{
    return scenario ? scenario->config.params.m : 0;
}

const char* infodiff_scenario_output(const infodiff_scenario* scenario)
{
    return scenario ? scenario->config.output.c_str() : nullptr;
}

infodiff_status infodiff_scenario_set_seed(infodiff_scenario* scenario, uint64_t seed)
{
    return modify(scenario, [&](infodiff::ScenarioConfig& c) {
        c.dtmc.seed = seed;
    });
}

infodiff_status infodiff_scenario_set_replicas(infodiff_scenario* scenario, size_t replicas)
{
    return modify(scenario, [&](infodiff::ScenarioConfig& c) {
        c.dtmc.replicas = replicas;
    });
}

infodiff_status infodiff_scenario_set_dt(infodiff_scenario* scenario, double dt)
{
    return modify(scenario, [&](infodiff::ScenarioConfig& c) {
        c.dtmc.dt = dt;
    });
}

infodiff_status infodiff_scenario_set_horizon(infodiff_scenario* scenario, double horizon)
{
    return modify(scenario, [&](infodiff::ScenarioConfig& c) {
        c.integration.horizon = horizon;
    });
}

infodiff_status infodiff_scenario_set_output(infodiff_scenario* scenario, const char* path)
{
    if (!path) {
        return null_argument("path");
    }
    return modify(scenario, [&](infodiff::ScenarioConfig& c) {
        c.output = path;
    });
}

infodiff_status infodiff_scenario_set_alpha(infodiff_scenario* scenario, double alpha)
{
    return modify(scenario, [&](infodiff::ScenarioConfig& c) {
        c.params.alpha = alpha;
    });
}

infodiff_status infodiff_scenario_set_target_r0(infodiff_scenario* scenario, double target)
{
    return modify(scenario, [&](infodiff::ScenarioConfig& c) {
        if (target > 0.0) {
            c.target_r0 = target;
        }
        else {
            c.target_r0.reset();
        }
    });
}

infodiff_status infodiff_scenario_effective_alpha(const infodiff_scenario* scenario, double* alpha)
{
    if (!scenario) {
        return null_argument("scenario");
    }
    if (!alpha) {
        return null_argument("alpha");
    }
    return guarded([&] {
        *alpha = infodiff::effective_params(scenario->config).alpha;
    });
}

infodiff_status infodiff_r0(const infodiff_scenario* scenario, double* r0, double* r0_rank_one, double* f, double* v,
                            double* k)
{
    if (!scenario) {
        return null_argument("scenario");
    }
    if (!r0) {
        return null_argument("r0");
    }
    return guarded([&] {
        const infodiff::ModelParams params           = infodiff::effective_params(scenario->config);
        const infodiff::NextGenDecomposition decomp  = infodiff::build_decomposition(params);
        const double rank_one                        = infodiff::r0_rank_one(params);
        *r0                                          = decomp.r0;
        if (r0_rank_one) {
            *r0_rank_one = rank_one;
        }
        copy_matrix(decomp.f, f);
        copy_matrix(decomp.v, v);
        copy_matrix(decomp.k, k);
    });
}

infodiff_status infodiff_calibrate_alpha(const infodiff_scenario* scenario, double target_r0, double* alpha)
{
    if (!scenario) {
        return null_argument("scenario");
    }
    if (!alpha) {
        return null_argument("alpha");
    }
    return guarded([&] {
        *alpha = infodiff::calibrate_alpha(scenario->config.params, target_r0);
    });
}

infodiff_status infodiff_run_ode(const infodiff_scenario* scenario, infodiff_table** out)
{
    if (!scenario) {
        return null_argument("scenario");
    }
    if (!out) {
        return null_argument("out");
    }
    return guarded([&] {
        *out = wrap(infodiff::to_table(infodiff::run_ode(scenario->config)));
    });
}

infodiff_status infodiff_run_dtmc(const infodiff_scenario* scenario, infodiff_table** out)
{
    if (!scenario) {
        return null_argument("scenario");
    }
    if (!out) {
        return null_argument("out");
    }
    return guarded([&] {
        *out = wrap(infodiff::to_table(infodiff::run_dtmc(scenario->config)));
    });
}

infodiff_status infodiff_run_compare(const infodiff_scenario* scenario, infodiff_table** out)
{
    if (!scenario) {
        return null_argument("scenario");
    }
    if (!out) {
        return null_argument("out");
    }
    return guarded([&] {
        const infodiff::Comparison cmp = infodiff::run_compare(scenario->config);
        *out                           = wrap(infodiff::comparison_table(cmp.monte_carlo, cmp.ode));
    });
}

infodiff_status infodiff_extinction_sweep(const infodiff_scenario* scenario, const double* r0_grid, size_t n,
                                          infodiff_table** out)
{
    if (!scenario) {
        return null_argument("scenario");
    }
    if (!r0_grid && n > 0) {
        return null_argument("r0_grid");
    }
    if (!out) {
        return null_argument("out");
    }
    return guarded([&] {
        *out = wrap(infodiff::extinction_sweep(scenario->config, {r0_grid, n}));
    });
}

infodiff_status infodiff_logistic_sweep(const infodiff_scenario* scenario, const double* capacity_grid, size_t n,
                                        infodiff_table** summary, infodiff_table** runs)
{
    if (!scenario) {
        return null_argument("scenario");
    }
    if (!capacity_grid && n > 0) {
        return null_argument("capacity_grid");
    }
    if (!summary) {
        return null_argument("summary");
    }
    return guarded([&] {
        infodiff::LogisticSweep sweep = infodiff::logistic_sweep(scenario->config, {capacity_grid, n});
        std::vector<std::unique_ptr<infodiff_table>> tables;
        if (runs) {
            for (const auto& cmp : sweep.runs) {
                tables.emplace_back(wrap(infodiff::comparison_table(cmp.monte_carlo, cmp.ode)));
            }
        }
        *summary = wrap(std::move(sweep.summary));
        for (std::size_t i = 0; i < tables.size(); ++i) {
            runs[i] = tables[i].release();
        }
    });
}

size_t infodiff_table_rows(const infodiff_table* table)
{
    return table ? table->table.rows.size() : 0;
}

size_t infodiff_table_columns(const infodiff_table* table)
{
    return table ? table->table.header.size() : 0;
}

const char* infodiff_table_column_name(const infodiff_table* table, size_t column)
{
    if (!table || column >= table->table.header.size()) {
        return nullptr;
    }
    return table->table.header[column].c_str();
}

infodiff_status infodiff_table_column_index(const infodiff_table* table, const char* name, size_t* index)
{
    if (!table) {
        return null_argument("table");
    }
    if (!name) {
        return null_argument("name");
    }
    if (!index) {
        return null_argument("index");
    }
    const auto& header = table->table.header;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] == name) {
            *index = c;
            return INFODIFF_OK;
        }
    }
    return fail(INFODIFF_ERR_INVALID_ARGUMENT, (std::string("no column named '") + name + "'").c_str());
}

double infodiff_table_value(const infodiff_table* table, size_t row, size_t column)
{
    if (!table || row >= table->table.rows.size() || column >= table->table.rows[row].size()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return table->table.rows[row][column];
}

infodiff_status infodiff_table_write_csv(const infodiff_table* table, const char* path)
{
    if (!table) {
        return null_argument("table");
    }
    if (!path) {
        return null_argument("path");
    }
    return guarded([&] {
        infodiff::write_csv_file(path, table->table);
    });
}

void infodiff_table_free(infodiff_table* table)
{
    delete table;
}

} // extern "C"
