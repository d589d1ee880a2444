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
 * C interface of libinfodiff.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Every fallible call returns an infodiff_status;
 * on failure infodiff_last_error() describes the problem (per thread, valid
 * until the next failing call on that thread). Output pointers are only
 * written on success.
 */
#ifndef INFODIFF_H
#define INFODIFF_H

#include <stddef.h>
#include <stdint.h>

#if defined(INFODIFF_BUILDING_LIBRARY)
#define INFODIFF_API __attribute__((visibility("default")))
#else
#define INFODIFF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum infodiff_status {
    INFODIFF_OK                   = 0,
    INFODIFF_ERR_INVALID_ARGUMENT = 1, /* null handle or pointer, index out of range */
    INFODIFF_ERR_CONFIG           = 2, /* malformed or inconsistent scenario */
    INFODIFF_ERR_DOMAIN           = 3, /* parameters outside an operation's domain */
    INFODIFF_ERR_NUMERIC          = 4, /* NaN/Inf, non-convergent power iteration */
    INFODIFF_ERR_CONVERGENCE      = 5, /* equilibrium search hit its horizon cap */
    INFODIFF_ERR_STEP_SIZE        = 6, /* DTMC step too large */
    INFODIFF_ERR_UNSUPPORTED      = 7, /* mode not available for this model */
    INFODIFF_ERR_IO               = 8,
    INFODIFF_ERR_INTERNAL         = 9
} infodiff_status;

typedef struct infodiff_scenario infodiff_scenario;
typedef struct infodiff_table infodiff_table;

INFODIFF_API const char* infodiff_version(void);
INFODIFF_API const char* infodiff_last_error(void);
INFODIFF_API const char* infodiff_status_name(infodiff_status status);

/* Scenarios. `path_or_name` may be the bundled name "table2". */
INFODIFF_API infodiff_status infodiff_scenario_load(const char* path_or_name, infodiff_scenario** out);
INFODIFF_API infodiff_status infodiff_scenario_parse(const char* text, infodiff_scenario** out);
INFODIFF_API void infodiff_scenario_free(infodiff_scenario* scenario);

/* Renders every key; release with infodiff_string_free. */
INFODIFF_API infodiff_status infodiff_scenario_render(const infodiff_scenario* scenario, char** text);
INFODIFF_API void infodiff_string_free(char* text);

INFODIFF_API size_t infodiff_scenario_groups(const infodiff_scenario* scenario);
/* Borrowed pointer, valid until the scenario is modified or freed. */
INFODIFF_API const char* infodiff_scenario_output(const infodiff_scenario* scenario);

/* Overrides; rejected (INFODIFF_ERR_CONFIG, scenario unchanged) if the result is invalid. */
INFODIFF_API infodiff_status infodiff_scenario_set_seed(infodiff_scenario* scenario, uint64_t seed);
INFODIFF_API infodiff_status infodiff_scenario_set_replicas(infodiff_scenario* scenario, size_t replicas);
INFODIFF_API infodiff_status infodiff_scenario_set_dt(infodiff_scenario* scenario, double dt);
INFODIFF_API infodiff_status infodiff_scenario_set_horizon(infodiff_scenario* scenario, double horizon);
INFODIFF_API infodiff_status infodiff_scenario_set_output(infodiff_scenario* scenario, const char* path);
INFODIFF_API infodiff_status infodiff_scenario_set_alpha(infodiff_scenario* scenario, double alpha);
/* target <= 0 clears the target. */
INFODIFF_API infodiff_status infodiff_scenario_set_target_r0(infodiff_scenario* scenario, double target);

/* alpha used by runs: calibrated from target_r0 when one is set. */
INFODIFF_API infodiff_status infodiff_scenario_effective_alpha(const infodiff_scenario* scenario, double* alpha);

/*
 * Next-generation decomposition at the effective alpha. f, v and k receive
 * m*m row-major entries each and may be NULL; r0_rank_one may be NULL.
 */
INFODIFF_API infodiff_status infodiff_r0(const infodiff_scenario* scenario, double* r0, double* r0_rank_one,
                                         double* f, double* v, double* k);
INFODIFF_API infodiff_status infodiff_calibrate_alpha(const infodiff_scenario* scenario, double target_r0,
                                                      double* alpha);

/*
 * Runs. Monte Carlo work is spread over DIFFUSION_THREADS threads
 * (unset or 0: hardware concurrency); results do not depend on it.
 */
INFODIFF_API infodiff_status infodiff_run_ode(const infodiff_scenario* scenario, infodiff_table** out);
INFODIFF_API infodiff_status infodiff_run_dtmc(const infodiff_scenario* scenario, infodiff_table** out);
/* Monte Carlo mean and spread followed by ode_* columns. */
INFODIFF_API infodiff_status infodiff_run_compare(const infodiff_scenario* scenario, infodiff_table** out);
INFODIFF_API infodiff_status infodiff_extinction_sweep(const infodiff_scenario* scenario, const double* r0_grid,
                                                       size_t n, infodiff_table** out);
/* runs: caller array of n handles receiving one comparison table per capacity; may be NULL. */
INFODIFF_API infodiff_status infodiff_logistic_sweep(const infodiff_scenario* scenario, const double* capacity_grid,
                                                     size_t n, infodiff_table** summary, infodiff_table** runs);

/* Tables. */
INFODIFF_API size_t infodiff_table_rows(const infodiff_table* table);
INFODIFF_API size_t infodiff_table_columns(const infodiff_table* table);
/* NULL if out of range. */
INFODIFF_API const char* infodiff_table_column_name(const infodiff_table* table, size_t column);
INFODIFF_API infodiff_status infodiff_table_column_index(const infodiff_table* table, const char* name,
                                                         size_t* index);
/* NaN if out of range. */
INFODIFF_API double infodiff_table_value(const infodiff_table* table, size_t row, size_t column);
INFODIFF_API infodiff_status infodiff_table_write_csv(const infodiff_table* table, const char* path);
INFODIFF_API void infodiff_table_free(infodiff_table* table);

#ifdef __cplusplus
}
#endif

#endif /* INFODIFF_H */
