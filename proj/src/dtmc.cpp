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
#include "infodiff/dtmc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <random>
#include <string>
#include <thread>

namespace infodiff
{

namespace
{

constexpr std::size_t replicas_per_block = 64;

constexpr EventType paper_literal_order[] = {EventType::activate, EventType::deactivate, EventType::ret,
                                             EventType::withdraw};
constexpr EventType full_order[] = {EventType::activate, EventType::deactivate, EventType::ret,
                                    EventType::withdraw, EventType::death_s,    EventType::death_a,
                                    EventType::death_d,  EventType::birth};

std::uint64_t splitmix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Event probabilities for one step, written into a caller-owned buffer in table order.
class StepKernel
{
public:
    StepKernel(const ModelParams& params, ChainMode mode, const LogisticConfig& logistic)
        : params_(params)
        , mode_(mode)
        , logistic_(logistic)
    {
        params_.validate();
        if (logistic_.enabled) {
            if (mode_ == ChainMode::paper_literal) {
                throw UnsupportedModeError("logistic population dynamics need the full chain mode");
            }
            logistic_.validate();
        }
    }

    std::size_t events() const
    {
        return (mode_ == ChainMode::full ? 8 : 4) * params_.m;
    }

    EventKind kind(std::size_t index) const
    {
        const std::size_t m = params_.m;
        const EventType type =
            mode_ == ChainMode::full ? full_order[index / m] : paper_literal_order[index / m];
        return {type, index % m};
    }

    double fill(const DiscreteState& st, double dt, std::vector<double>& p) const
    {
        const std::size_t m = params_.m;
        p.resize(events());

        double reference = params_.n_total;
        double birth     = 0.0;
        double death     = 0.0;
        if (logistic_.enabled) {
            const double n = static_cast<double>(st.total());
            birth          = logistic_.growth_rate * n / static_cast<double>(m);
            death          = logistic_.growth_rate * n / logistic_.capacity;
            if (n > 0.0) {
                reference = n;
            }
        }

        double weighted_active = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            weighted_active += params_.gamma[j] * static_cast<double>(st.a[j]);
        }
        const double pressure = params_.alpha * weighted_active / reference;

        for (std::size_t i = 0; i < m; ++i) {
            const double s  = static_cast<double>(st.s[i]);
            const double a  = static_cast<double>(st.a[i]);
            const double dd = static_cast<double>(st.dd[i]);
            const double d  = logistic_.enabled ? death : params_.d[i];
            p[i]            = params_.eps[i] * pressure * s * dt;
            p[2 * m + i]    = params_.delta[i] * dd * dt;
            if (mode_ == ChainMode::paper_literal) {
                p[m + i]     = (params_.phi[i] + d) * a * dt;
                p[3 * m + i] = (d + params_.rho[i]) * s * dt;
            }
            else {
                p[m + i]     = params_.phi[i] * a * dt;
                p[3 * m + i] = params_.rho[i] * s * dt;
                p[4 * m + i] = d * s * dt;
                p[5 * m + i] = d * a * dt;
                p[6 * m + i] = d * dd * dt;
                p[7 * m + i] = (logistic_.enabled ? birth : params_.b[i]) * dt;
            }
        }

        double total = 0.0;
        for (double x : p) {
            total += x;
        }
        if (!(total <= 1.0)) {
            throw StepSizeError("event probabilities sum to " + std::to_string(total) + " > 1 at dt = " +
                                    std::to_string(dt) + "; reduce dt",
                                total);
        }
        return total;
    }

    ChainMode mode() const
    {
        return mode_;
    }

private:
    ModelParams params_;
    ChainMode mode_;
    LogisticConfig logistic_;
};

void check_state(const ModelParams& params, const DiscreteState& st)
{
    if (st.s.size() != params.m || st.a.size() != params.m || st.dd.size() != params.m) {
        throw DomainError("discrete state dimension does not match params.m");
    }
    for (const auto* v : {&st.s, &st.a, &st.dd}) {
        if (std::any_of(v->begin(), v->end(), [](std::int64_t x) {
                return x < 0;
            })) {
            throw DomainError("discrete state counts must be >= 0");
        }
    }
}

void check_run(const ModelParams& params, const DiscreteState& init, const DtmcConfig& cfg)
{
    cfg.validate();
    check_state(params, init);
    if (cfg.mode == ChainMode::paper_literal &&
        std::abs(static_cast<double>(init.total()) - params.n_total) > 1e-9) {
        throw DomainError("paper-literal chains keep the population constant: the initial counts must sum to "
                          "n_total");
    }
}

/// Runs one chain; calls record(step, state) at recorded steps. Returns the step at which stop() held, if any.
template <class Record, class Stop>
std::optional<std::size_t> run_chain(const StepKernel& kernel, DiscreteState state, const DtmcConfig& cfg,
                                     std::uint64_t seed, Record&& record, Stop&& stop)
{
    std::mt19937_64 rng(seed);
    std::vector<double> probs(kernel.events());
    const std::size_t n_steps = cfg.total_steps();

    record(std::size_t{0}, state);
    if (stop(state)) {
        return 0;
    }
    for (std::size_t k = 1; k <= n_steps; ++k) {
        const double total = kernel.fill(state, cfg.dt, probs);
        const double u     = uniform01(rng);
        if (u < total) {
            // cumulative sum in the same order as `total`, so some index satisfies u < c
            double c          = 0.0;
            std::size_t index = 0;
            for (; index + 1 < probs.size(); ++index) {
                c += probs[index];
                if (u < c) {
                    break;
                }
            }
            apply_event(state, kernel.kind(index));
        }
        if (k % cfg.record_every == 0) {
            record(k, state);
        }
        if (stop(state)) {
            return k;
        }
    }
    return std::nullopt;
}

/// Runs task(i) for i in [0, count) on up to `threads` workers; rethrows the exception of the lowest failing i.
template <class Task>
void parallel_for(std::size_t count, unsigned threads, Task&& task)
{
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                task(i);
            }
            catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n_workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (n_workers <= 1) {
        worker();
    }
    else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

TrajectorySample empty_sample(double t, std::size_t m)
{
    return {t, std::vector<double>(m, 0.0), std::vector<double>(m, 0.0), std::vector<double>(m, 0.0)};
}

} // namespace

std::int64_t DiscreteState::total() const
{
    return std::accumulate(s.begin(), s.end(), std::int64_t{0}) + std::accumulate(a.begin(), a.end(), std::int64_t{0}) +
           std::accumulate(dd.begin(), dd.end(), std::int64_t{0});
}

std::int64_t DiscreteState::total_active() const
{
    return std::accumulate(a.begin(), a.end(), std::int64_t{0});
}

std::string_view to_string(ChainMode mode)
{
    return mode == ChainMode::paper_literal ? "paper_literal" : "full";
}

std::optional<ChainMode> parse_chain_mode(std::string_view text)
{
    if (text == "paper_literal") {
        return ChainMode::paper_literal;
    }
    if (text == "full") {
        return ChainMode::full;
    }
    return std::nullopt;
}

std::string_view to_string(EventType type)
{
    switch (type) {
    case EventType::activate:
        return "activate";
    case EventType::deactivate:
        return "deactivate";
    case EventType::ret:
        return "return";
    case EventType::withdraw:
        return "withdraw";
    case EventType::death_s:
        return "death_s";
    case EventType::death_a:
        return "death_a";
    case EventType::death_d:
        return "death_d";
    case EventType::birth:
        return "birth";
    case EventType::no_event:
        return "no_event";
    }
    return "unknown";
}

double TransitionTable::probability(const EventKind& kind) const
{
    for (const auto& [k, p] : entries) {
        if (k == kind || (kind.type == EventType::no_event && k.type == EventType::no_event)) {
            return p;
        }
    }
    return 0.0;
}

double TransitionTable::total() const
{
    double sum = 0.0;
    for (const auto& entry : entries) {
        sum += entry.second;
    }
    return sum;
}

TransitionTable event_probabilities(const ModelParams& params, const DiscreteState& state, double dt,
                                    ChainMode mode, const LogisticConfig& logistic)
{
    if (!std::isfinite(dt) || dt <= 0.0) {
        throw DomainError("event_probabilities: dt must be > 0");
    }
    const StepKernel kernel(params, mode, logistic);
    check_state(params, state);
    std::vector<double> probs;
    const double total = kernel.fill(state, dt, probs);

    TransitionTable table;
    table.dt = dt;
    table.entries.reserve(probs.size() + 1);
    for (std::size_t i = 0; i < probs.size(); ++i) {
        table.entries.emplace_back(kernel.kind(i), probs[i]);
    }
    table.entries.emplace_back(EventKind{EventType::no_event, 0}, 1.0 - total);
    return table;
}

double max_stable_dt(const ModelParams& params, std::int64_t population, double safety, double horizon)
{
    return max_stable_dt(params, LogisticConfig{}, population, safety, horizon);
}

double max_stable_dt(const ModelParams& params, const LogisticConfig& logistic, std::int64_t population,
                     double safety, double horizon)
{
    params.validate();
    if (population < 1) {
        throw DomainError("max_stable_dt: population must be >= 1");
    }
    if (!(safety > 0.0 && safety <= 1.0)) {
        throw DomainError("max_stable_dt: safety must lie in (0, 1]");
    }
    if (!(horizon > 0.0)) {
        throw DomainError("max_stable_dt: horizon must be > 0");
    }
    const double n       = static_cast<double>(population);
    const double max_eps = *std::max_element(params.eps.begin(), params.eps.end());
    const double max_gam = *std::max_element(params.gamma.begin(), params.gamma.end());

    // sum_i eps_i s_i * sum_j gamma_j a_j <= max_eps max_gamma S A with S + A <= n.
    double r_max = 0.0;
    if (logistic.enabled) {
        logistic.validate();
        // S A / N <= (S + A) / 4 <= n / 4 when the reference is N itself
        r_max += params.alpha * max_eps * max_gam * n / 4.0;
        double linear = 0.0;
        for (std::size_t i = 0; i < params.m; ++i) {
            linear = std::max({linear, params.phi[i], params.delta[i], params.rho[i]});
        }
        r_max += linear * n + logistic.growth_rate * n + logistic.growth_rate * n * n / logistic.capacity;
    }
    else {
        r_max += params.alpha * max_eps * max_gam * n * n / (4.0 * params.n_total);
        double linear = 0.0;
        for (std::size_t i = 0; i < params.m; ++i) {
            const double d = params.d[i];
            linear         = std::max({linear, params.phi[i] + d, params.delta[i] + d, params.rho[i] + d});
        }
        r_max += linear * n + std::accumulate(params.b.begin(), params.b.end(), 0.0);
    }
    if (r_max <= 0.0) {
        return horizon;
    }
    return safety / r_max;
}

void apply_event(DiscreteState& state, const EventKind& event)
{
    const std::size_t i = event.group;
    switch (event.type) {
    case EventType::activate:
        --state.s[i];
        ++state.a[i];
        break;
    case EventType::deactivate:
        --state.a[i];
        ++state.dd[i];
        break;
    case EventType::ret:
        --state.dd[i];
        ++state.s[i];
        break;
    case EventType::withdraw:
        --state.s[i];
        ++state.dd[i];
        break;
    case EventType::death_s:
        --state.s[i];
        break;
    case EventType::death_a:
        --state.a[i];
        break;
    case EventType::death_d:
        --state.dd[i];
        break;
    case EventType::birth:
        ++state.s[i];
        break;
    case EventType::no_event:
        break;
    }
}

std::size_t DtmcConfig::total_steps() const
{
    return static_cast<std::size_t>(std::floor(horizon / dt + 1e-9));
}

void DtmcConfig::validate() const
{
    if (!std::isfinite(dt) || dt <= 0.0) {
        throw DomainError("dtmc: dt must be > 0");
    }
    if (!std::isfinite(horizon) || horizon < 0.0) {
        throw DomainError("dtmc: horizon must be >= 0");
    }
    if (record_every == 0) {
        throw DomainError("dtmc: record_every must be >= 1");
    }
}

std::uint64_t replica_seed(std::uint64_t seed, std::uint64_t replica)
{
    return splitmix64(seed + (replica + 1) * 0x9E3779B97F4A7C15ULL);
}

unsigned resolve_threads(unsigned requested)
{
    if (requested > 0) {
        return requested;
    }
    if (const char* env = std::getenv("DIFFUSION_THREADS")) {
        char* end          = nullptr;
        const long value   = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) {
            return static_cast<unsigned>(value);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

TrajectoryTable simulate_replica(const ModelParams& params, const DiscreteState& init, const DtmcConfig& cfg,
                                 std::uint64_t seed, const LogisticConfig& logistic)
{
    const StepKernel kernel(params, cfg.mode, logistic);
    check_run(params, init, cfg);

    TrajectoryTable table;
    table.groups = params.m;
    table.samples.reserve(cfg.total_steps() / cfg.record_every + 1);
    auto as_doubles = [](const std::vector<std::int64_t>& v) {
        return std::vector<double>(v.begin(), v.end());
    };
    run_chain(
        kernel, init, cfg, seed,
        [&](std::size_t k, const DiscreteState& st) {
            table.samples.push_back({static_cast<double>(k) * cfg.dt, as_doubles(st.s), as_doubles(st.a),
                                     as_doubles(st.dd)});
        },
        [](const DiscreteState&) {
            return false;
        });
    return table;
}

TrajectoryTable monte_carlo_mean(const ModelParams& params, const DiscreteState& init, const DtmcConfig& cfg,
                                 std::size_t n_replicas, std::uint64_t seed, const LogisticConfig& logistic,
                                 unsigned threads)
{
    if (n_replicas == 0) {
        throw DomainError("monte_carlo_mean: need at least one replica");
    }
    const StepKernel kernel(params, cfg.mode, logistic);
    check_run(params, init, cfg);

    const std::size_t m         = params.m;
    const std::size_t n_samples = cfg.total_steps() / cfg.record_every + 1;
    const std::size_t width     = 3 * m;
    const std::size_t n_blocks  = (n_replicas + replicas_per_block - 1) / replicas_per_block;
    const unsigned n_threads    = resolve_threads(threads);

    // Block partial sums are reduced in block order; a wave bounds how many partials exist at once.
    std::vector<double> sum(n_samples * width, 0.0);
    std::vector<double> sum_sq(n_samples * width, 0.0);
    const std::size_t wave = std::max<std::size_t>(1, 4 * static_cast<std::size_t>(n_threads));
    std::vector<std::vector<double>> part_sum(wave);
    std::vector<std::vector<double>> part_sq(wave);

    for (std::size_t first = 0; first < n_blocks; first += wave) {
        const std::size_t count = std::min(wave, n_blocks - first);
        parallel_for(count, n_threads, [&](std::size_t w) {
            auto& ps = part_sum[w];
            auto& pq = part_sq[w];
            ps.assign(n_samples * width, 0.0);
            pq.assign(n_samples * width, 0.0);
            const std::size_t begin = (first + w) * replicas_per_block;
            const std::size_t end   = std::min(n_replicas, begin + replicas_per_block);
            for (std::size_t r = begin; r < end; ++r) {
                run_chain(
                    kernel, init, cfg, replica_seed(seed, r),
                    [&](std::size_t k, const DiscreteState& st) {
                        double* row_sum = ps.data() + (k / cfg.record_every) * width;
                        double* row_sq  = pq.data() + (k / cfg.record_every) * width;
                        for (std::size_t i = 0; i < m; ++i) {
                            const double v[3] = {static_cast<double>(st.s[i]), static_cast<double>(st.a[i]),
                                                 static_cast<double>(st.dd[i])};
                            for (std::size_t c = 0; c < 3; ++c) {
                                row_sum[c * m + i] += v[c];
                                row_sq[c * m + i] += v[c] * v[c];
                            }
                        }
                    },
                    [](const DiscreteState&) {
                        return false;
                    });
            }
        });
        for (std::size_t w = 0; w < count; ++w) {
            for (std::size_t x = 0; x < sum.size(); ++x) {
                sum[x] += part_sum[w][x];
                sum_sq[x] += part_sq[w][x];
            }
        }
    }

    const double n = static_cast<double>(n_replicas);
    TrajectoryTable table;
    table.groups = m;
    table.samples.reserve(n_samples);
    table.spread.reserve(n_samples);
    for (std::size_t row = 0; row < n_samples; ++row) {
        const double t = static_cast<double>(row * cfg.record_every) * cfg.dt;
        TrajectorySample mean = empty_sample(t, m);
        TrajectorySample sd   = empty_sample(t, m);
        std::vector<double>* mean_cols[3] = {&mean.s, &mean.a, &mean.dd};
        std::vector<double>* sd_cols[3]   = {&sd.s, &sd.a, &sd.dd};
        for (std::size_t c = 0; c < 3; ++c) {
            for (std::size_t i = 0; i < m; ++i) {
                const double s1 = sum[row * width + c * m + i];
                const double s2 = sum_sq[row * width + c * m + i];
                (*mean_cols[c])[i] = s1 / n;
                (*sd_cols[c])[i] =
                    n_replicas > 1 ? std::sqrt(std::max(0.0, (s2 - s1 * s1 / n) / (n - 1.0))) : 0.0;
            }
        }
        table.samples.push_back(std::move(mean));
        table.spread.push_back(std::move(sd));
    }
    return table;
}

ExtinctionStats extinction_time_stochastic(const ModelParams& params, const DiscreteState& init,
                                           const DtmcConfig& cfg, std::size_t n_replicas, std::uint64_t seed,
                                           const LogisticConfig& logistic, unsigned threads)
{
    if (n_replicas == 0) {
        throw DomainError("extinction_time_stochastic: need at least one replica");
    }
    const StepKernel kernel(params, cfg.mode, logistic);
    check_run(params, init, cfg);

    ExtinctionStats stats;
    stats.times.resize(n_replicas);
    const std::size_t n_blocks = (n_replicas + replicas_per_block - 1) / replicas_per_block;
    parallel_for(n_blocks, resolve_threads(threads), [&](std::size_t block) {
        const std::size_t begin = block * replicas_per_block;
        const std::size_t end   = std::min(n_replicas, begin + replicas_per_block);
        for (std::size_t r = begin; r < end; ++r) {
            const auto step = run_chain(
                kernel, init, cfg, replica_seed(seed, r), [](std::size_t, const DiscreteState&) {},
                [](const DiscreteState& st) {
                    return st.total_active() == 0;
                });
            if (step) {
                stats.times[r] = static_cast<double>(*step) * cfg.dt;
            }
        }
    });

    double sum = 0.0;
    std::size_t done = 0;
    for (const auto& t : stats.times) {
        if (t) {
            sum += *t;
            ++done;
        }
    }
    stats.censored = n_replicas - done;
    if (done > 0) {
        const double mean = sum / static_cast<double>(done);
        double sq         = 0.0;
        for (const auto& t : stats.times) {
            if (t) {
                sq += (*t - mean) * (*t - mean);
            }
        }
        stats.mean   = mean;
        stats.spread = done > 1 ? std::sqrt(sq / static_cast<double>(done - 1)) : 0.0;
    }
    return stats;
}

} // namespace infodiff
