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
#ifndef INFODIFF_DTMC_HPP
#define INFODIFF_DTMC_HPP

#include "infodiff/model.hpp"
#include "infodiff/population.hpp"
#include "infodiff/trajectory.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace infodiff
{

/// Integer counts per group.
struct DiscreteState {
    std::vector<std::int64_t> s;
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> dd;

    std::size_t groups() const
    {
        return s.size();
    }
    std::int64_t total() const;
    std::int64_t total_active() const;

    friend bool operator==(const DiscreteState&, const DiscreteState&) = default;
};

/**
 * paper_literal: constant population, births ignored, deaths from S and A
 * funneled into D (withdraw at d_i + rho_i, deactivate at d_i + phi_i).
 * full: explicit births and per-compartment deaths; the population varies.
 */
enum class ChainMode
{
    paper_literal,
    full
};

std::string_view to_string(ChainMode mode);
std::optional<ChainMode> parse_chain_mode(std::string_view text);

enum class EventType
{
    activate,   // S_i -> A_i
    deactivate, // A_i -> D_i
    ret,        // D_i -> S_i
    withdraw,   // S_i -> D_i
    death_s,
    death_a,
    death_d,
    birth,
    no_event
};

struct EventKind {
    EventType type    = EventType::no_event;
    std::size_t group = 0;

    friend bool operator==(const EventKind&, const EventKind&) = default;
};

std::string_view to_string(EventType type);

/**
 * One-step event probabilities in the fixed enumeration order
 * activate(1..m), deactivate(1..m), return(1..m), withdraw(1..m),
 * [death_s, death_a, death_d, birth (1..m) in full mode], no_event.
 * no_event is the complement so the entries sum to one.
 */
struct TransitionTable {
    std::vector<std::pair<EventKind, double>> entries;
    double dt = 0.0;

    double probability(const EventKind& kind) const;
    double total() const;
};

/// Throws StepSizeError if the event probabilities sum above one, UnsupportedModeError for paper-literal logistic runs.
TransitionTable event_probabilities(const ModelParams& params, const DiscreteState& state, double dt, ChainMode mode,
                                    const LogisticConfig& logistic = {});

/**
 * Largest dt for which no state with at most `population` individuals in total
 * can make the summed event probability exceed `safety`. Valid for both modes.
 * Returns `horizon` when every rate vanishes.
 */
double max_stable_dt(const ModelParams& params, std::int64_t population, double safety, double horizon);
double max_stable_dt(const ModelParams& params, const LogisticConfig& logistic, std::int64_t population,
                     double safety, double horizon);

void apply_event(DiscreteState& state, const EventKind& event);

struct DtmcConfig {
    double dt                = 0.01;
    double horizon           = 1.0;
    ChainMode mode           = ChainMode::full;
    std::size_t record_every = 1; // steps between recorded samples

    std::size_t total_steps() const;
    void validate() const;
};

/// SplitMix64 finalizer of (seed + (replica + 1) * golden gamma): the seed of replica `replica`'s stream.
std::uint64_t replica_seed(std::uint64_t seed, std::uint64_t replica);

/// Threads to use: `requested` if nonzero, else DIFFUSION_THREADS if set and nonzero, else the hardware count.
unsigned resolve_threads(unsigned requested = 0);

/**
 * One realisation of the chain. Each epoch draws one uniform variate from a
 * std::mt19937_64 seeded with `seed` (53 high bits scaled to [0, 1)) and
 * picks the event by cumulative probability in TransitionTable order.
 */
TrajectoryTable simulate_replica(const ModelParams& params, const DiscreteState& init, const DtmcConfig& cfg,
                                 std::uint64_t seed, const LogisticConfig& logistic = {});

/**
 * Mean and sample standard deviation over n_replicas replicas; replica r uses
 * replica_seed(seed, r). Replicas run in fixed-size blocks reduced in block
 * order, so the result does not depend on the thread count.
 */
TrajectoryTable monte_carlo_mean(const ModelParams& params, const DiscreteState& init, const DtmcConfig& cfg,
                                 std::size_t n_replicas, std::uint64_t seed, const LogisticConfig& logistic = {},
                                 unsigned threads = 0);

struct ExtinctionStats {
    std::vector<std::optional<double>> times; // nullopt: censored at the horizon
    std::size_t censored = 0;
    std::optional<double> mean;               // over uncensored replicas
    double spread = 0.0;                      // sample standard deviation of uncensored times

    bool all_censored() const
    {
        return censored == times.size();
    }
};

/// First epoch with no actives, per replica. Seeds as in monte_carlo_mean.
ExtinctionStats extinction_time_stochastic(const ModelParams& params, const DiscreteState& init,
                                           const DtmcConfig& cfg, std::size_t n_replicas, std::uint64_t seed,
                                           const LogisticConfig& logistic = {}, unsigned threads = 0);

} // namespace infodiff

#endif // INFODIFF_DTMC_HPP
