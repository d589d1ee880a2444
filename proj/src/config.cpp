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
#include "infodiff/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace infodiff
{

namespace
{

constexpr std::string_view table2_text = R"(# Reference scenario: two groups, N = 100.
m = 2
n_total = 100
alpha = 1
b = 0.01, 0.01
d = 0.01, 0.01
rho = 0.2, 0.2
delta = 0.03, 0.03
phi = 0.03, 0.03
eps = 0.4, 0.6
gamma = 0.4, 0.7
s0 = 30, 42
a0 = 20, 8
d0 = 0, 0
)";

const char* const known_keys[] = {"m",
                                  "n_total",
                                  "alpha",
                                  "b",
                                  "d",
                                  "rho",
                                  "delta",
                                  "phi",
                                  "eps",
                                  "gamma",
                                  "s0",
                                  "a0",
                                  "d0",
                                  "step",
                                  "horizon",
                                  "sample_every",
                                  "extinction_threshold",
                                  "dt",
                                  "replicas",
                                  "mode",
                                  "seed",
                                  "output",
                                  "target_r0",
                                  "logistic.enabled",
                                  "logistic.growth_rate",
                                  "logistic.capacity"};

const char* const required_keys[] = {"m", "n_total", "s0", "a0"};

struct Entry {
    std::string value;
    std::size_t line;
};

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

class EntryReader
{
public:
    explicit EntryReader(std::map<std::string, Entry> entries)
        : entries_(std::move(entries))
    {
    }

    bool has(const std::string& key) const
    {
        return entries_.count(key) > 0;
    }

    double number(const std::string& key, double fallback) const
    {
        const auto it = entries_.find(key);
        return it == entries_.end() ? fallback : parse_number(key, it->second.value, it->second.line);
    }

    std::uint64_t unsigned_integer(const std::string& key, std::uint64_t fallback) const
    {
        const auto it = entries_.find(key);
        if (it == entries_.end()) {
            return fallback;
        }
        const std::string& text = it->second.value;
        std::uint64_t v         = 0;
        const auto [ptr, ec]    = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            throw ConfigError(key + ": '" + text + "' is not a non-negative integer (line " +
                                  std::to_string(it->second.line) + ")",
                              key, it->second.line);
        }
        return v;
    }

    std::vector<double> array(const std::string& key, std::size_t m, std::vector<double> fallback) const
    {
        const auto it = entries_.find(key);
        if (it == entries_.end()) {
            return fallback;
        }
        std::vector<double> values;
        std::string_view rest = it->second.value;
        while (true) {
            const auto comma = rest.find(',');
            values.push_back(parse_number(key, std::string(trim(rest.substr(0, comma))), it->second.line));
            if (comma == std::string_view::npos) {
                break;
            }
            rest = rest.substr(comma + 1);
        }
        if (values.size() != m) {
            throw ConfigError(key + ": " + std::to_string(values.size()) + " value(s) given but m = " +
                                  std::to_string(m) + " (line " + std::to_string(it->second.line) + ")",
                              key, it->second.line);
        }
        return values;
    }

    bool boolean(const std::string& key, bool fallback) const
    {
        const auto it = entries_.find(key);
        if (it == entries_.end()) {
            return fallback;
        }
        const std::string& v = it->second.value;
        if (v == "true" || v == "1" || v == "yes") {
            return true;
        }
        if (v == "false" || v == "0" || v == "no") {
            return false;
        }
        throw ConfigError(key + ": expected true or false, got '" + v + "'", key, it->second.line);
    }

    std::string text(const std::string& key, std::string fallback) const
    {
        const auto it = entries_.find(key);
        return it == entries_.end() ? fallback : it->second.value;
    }

    std::size_t line(const std::string& key) const
    {
        const auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second.line;
    }

private:
    static double parse_number(const std::string& key, const std::string& text, std::size_t line)
    {
        double v             = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
            throw ConfigError(key + ": '" + text + "' is not a number (line " + std::to_string(line) + ")", key,
                              line);
        }
        return v;
    }

    std::map<std::string, Entry> entries_;
};

std::map<std::string, Entry> tokenize(std::string_view text)
{
    std::map<std::string, Entry> entries;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol        = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text                  = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'", {}, line_no);
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": missing key before '='", {}, line_no);
        }
        if (value.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": key '" + key + "' has no value", key,
                              line_no);
        }
        if (std::find(std::begin(known_keys), std::end(known_keys), key) == std::end(known_keys)) {
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'", key, line_no);
        }
        if (entries.count(key)) {
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'", key, line_no);
        }
        entries.emplace(key, Entry{value, line_no});
    }
    return entries;
}

void require(bool condition, const std::string& key, const std::string& message)
{
    if (!condition) {
        throw ConfigError(key + ": " + message, key);
    }
}

void require_nonnegative(const std::vector<double>& values, std::size_t m, const std::string& key)
{
    require(values.size() == m, key, "expected " + std::to_string(m) + " values");
    for (double v : values) {
        require(std::isfinite(v) && v >= 0.0, key, "entries must be finite and >= 0");
    }
}

std::string render_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string render_array(const std::vector<double>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? ", " : "") + render_number(values[i]);
    }
    return out;
}

} // namespace

void ScenarioConfig::validate() const
{
    const std::size_t m = params.m;
    require(m >= 1, "m", "must be a positive integer");
    require(std::isfinite(params.n_total) && params.n_total > 0.0, "n_total", "must be finite and > 0");
    require(std::isfinite(params.alpha) && params.alpha >= 0.0, "alpha", "must be finite and >= 0");
    require_nonnegative(params.b, m, "b");
    require_nonnegative(params.d, m, "d");
    require_nonnegative(params.rho, m, "rho");
    require_nonnegative(params.delta, m, "delta");
    require_nonnegative(params.phi, m, "phi");
    require_nonnegative(params.eps, m, "eps");
    require_nonnegative(params.gamma, m, "gamma");
    require_nonnegative(s0, m, "s0");
    require_nonnegative(a0, m, "a0");
    require_nonnegative(d0, m, "d0");

    const auto& ic = integration;
    require(std::isfinite(ic.step) && ic.step > 0.0, "step", "must be > 0");
    require(std::isfinite(ic.horizon) && ic.horizon > 0.0, "horizon", "must be > 0");
    require(std::isfinite(ic.sample_every) && ic.sample_every >= ic.step && ic.sample_every <= ic.horizon,
            "sample_every", "must satisfy step <= sample_every <= horizon");
    const double per_step = ic.sample_every / ic.step;
    require(std::abs(per_step - std::round(per_step)) <= 1e-9 * std::round(per_step), "sample_every",
            "must be an integer multiple of step");
    require(std::isfinite(ic.extinction_threshold) && ic.extinction_threshold > 0.0, "extinction_threshold",
            "must be > 0");

    require(std::isfinite(dtmc.dt) && dtmc.dt >= 0.0, "dt", "must be >= 0 (0 selects automatically)");
    if (dtmc.dt > 0.0) {
        const double per_dt = ic.sample_every / dtmc.dt;
        require(std::round(per_dt) >= 1.0 && std::abs(per_dt - std::round(per_dt)) <= 1e-9 * std::round(per_dt),
                "dt", "must divide sample_every");
    }
    require(dtmc.replicas >= 1, "replicas", "must be >= 1");

    require(std::isfinite(logistic.growth_rate) && logistic.growth_rate >= 0.0, "logistic.growth_rate",
            "must be finite and >= 0");
    require(std::isfinite(logistic.capacity) && logistic.capacity > 0.0, "logistic.capacity",
            "must be finite and > 0");
    if (target_r0) {
        require(std::isfinite(*target_r0) && *target_r0 > 0.0, "target_r0", "must be finite and > 0");
    }
    require(!output.empty() && output.find_first_of("#\n\r") == std::string::npos, "output",
            "must be a non-empty path without '#' or line breaks");

    const double initial = std::accumulate(s0.begin(), s0.end(), 0.0) + std::accumulate(a0.begin(), a0.end(), 0.0) +
                           std::accumulate(d0.begin(), d0.end(), 0.0);
    if (dtmc.mode == ChainMode::paper_literal) {
        require(std::abs(initial - params.n_total) <= 1e-9 * params.n_total, "n_total",
                "paper_literal mode needs s0 + a0 + d0 to sum to n_total");
    }
    else {
        require(initial <= params.n_total * (1.0 + 1e-12), "n_total",
                "initial populations s0 + a0 + d0 exceed n_total");
    }
}

ScenarioConfig parse_config(std::string_view text)
{
    const EntryReader in(tokenize(text));

    std::string missing;
    for (const char* key : required_keys) {
        if (!in.has(key)) {
            missing += missing.empty() ? key : std::string(", ") + key;
        }
    }
    if (!missing.empty()) {
        throw ConfigError("missing required keys: " + missing, missing.substr(0, missing.find(',')));
    }

    ScenarioConfig cfg;
    const std::uint64_t m = in.unsigned_integer("m", 0);
    if (m == 0 || m > 1000000) {
        throw ConfigError("m: must be a positive integer", "m", in.line("m"));
    }
    auto& p   = cfg.params;
    p.m       = static_cast<std::size_t>(m);
    p.n_total = in.number("n_total", 0.0);
    p.alpha   = in.number("alpha", 1.0);
    p.b       = in.array("b", p.m, std::vector<double>(p.m, 0.0));
    p.d       = in.array("d", p.m, std::vector<double>(p.m, 0.0));
    p.rho     = in.array("rho", p.m, std::vector<double>(p.m, 0.0));
    p.delta   = in.array("delta", p.m, std::vector<double>(p.m, 0.0));
    p.phi     = in.array("phi", p.m, std::vector<double>(p.m, 0.0));
    p.eps     = in.array("eps", p.m, std::vector<double>(p.m, 1.0));
    p.gamma   = in.array("gamma", p.m, std::vector<double>(p.m, 1.0));
    cfg.s0    = in.array("s0", p.m, {});
    cfg.a0    = in.array("a0", p.m, {});
    cfg.d0    = in.array("d0", p.m, std::vector<double>(p.m, 0.0));

    cfg.integration.step                 = in.number("step", cfg.integration.step);
    cfg.integration.horizon              = in.number("horizon", cfg.integration.horizon);
    cfg.integration.sample_every         = in.number("sample_every", cfg.integration.sample_every);
    cfg.integration.extinction_threshold = in.number("extinction_threshold", cfg.integration.extinction_threshold);

    cfg.dtmc.dt       = in.number("dt", cfg.dtmc.dt);
    cfg.dtmc.replicas = static_cast<std::size_t>(in.unsigned_integer("replicas", cfg.dtmc.replicas));
    cfg.dtmc.seed     = in.unsigned_integer("seed", cfg.dtmc.seed);
    if (in.has("mode")) {
        const auto mode = parse_chain_mode(in.text("mode", ""));
        if (!mode) {
            throw ConfigError("mode: expected paper_literal or full", "mode", in.line("mode"));
        }
        cfg.dtmc.mode = *mode;
    }

    cfg.output = in.text("output", cfg.output);
    if (in.has("target_r0")) {
        cfg.target_r0 = in.number("target_r0", 0.0);
    }
    cfg.logistic.enabled     = in.boolean("logistic.enabled", false);
    cfg.logistic.growth_rate = in.number("logistic.growth_rate", cfg.logistic.growth_rate);
    cfg.logistic.capacity    = in.number("logistic.capacity", p.n_total);

    cfg.validate();
    return cfg;
}

std::string render_config(const ScenarioConfig& c)
{
    std::ostringstream out;
    const auto& p = c.params;
    out << "m = " << p.m << '\n';
    out << "n_total = " << render_number(p.n_total) << '\n';
    out << "alpha = " << render_number(p.alpha) << '\n';
    out << "b = " << render_array(p.b) << '\n';
    out << "d = " << render_array(p.d) << '\n';
    out << "rho = " << render_array(p.rho) << '\n';
    out << "delta = " << render_array(p.delta) << '\n';
    out << "phi = " << render_array(p.phi) << '\n';
    out << "eps = " << render_array(p.eps) << '\n';
    out << "gamma = " << render_array(p.gamma) << '\n';
    out << "s0 = " << render_array(c.s0) << '\n';
    out << "a0 = " << render_array(c.a0) << '\n';
    out << "d0 = " << render_array(c.d0) << '\n';
    out << "step = " << render_number(c.integration.step) << '\n';
    out << "horizon = " << render_number(c.integration.horizon) << '\n';
    out << "sample_every = " << render_number(c.integration.sample_every) << '\n';
    out << "extinction_threshold = " << render_number(c.integration.extinction_threshold) << '\n';
    out << "dt = " << render_number(c.dtmc.dt) << '\n';
    out << "replicas = " << c.dtmc.replicas << '\n';
    out << "mode = " << to_string(c.dtmc.mode) << '\n';
    out << "seed = " << c.dtmc.seed << '\n';
    out << "output = " << c.output << '\n';
    if (c.target_r0) {
        out << "target_r0 = " << render_number(*c.target_r0) << '\n';
    }
    out << "logistic.enabled = " << (c.logistic.enabled ? "true" : "false") << '\n';
    out << "logistic.growth_rate = " << render_number(c.logistic.growth_rate) << '\n';
    out << "logistic.capacity = " << render_number(c.logistic.capacity) << '\n';
    return out.str();
}

ScenarioConfig load_config(const std::string& path_or_name)
{
    if (path_or_name == "table2") {
        return parse_config(table2_text);
    }
    std::ifstream in(path_or_name, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read config file '" + path_or_name + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string_view bundled_table2()
{
    return table2_text;
}

} // namespace infodiff
