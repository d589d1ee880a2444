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
#ifndef INFODIFF_TRAJECTORY_HPP
#define INFODIFF_TRAJECTORY_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace infodiff
{

/// Per-group populations at one sample time.
struct TrajectorySample {
    double t = 0.0;
    std::vector<double> s;
    std::vector<double> a;
    std::vector<double> dd;

    double total_active() const;
    double total_deactivated() const;
    double total() const;

    friend bool operator==(const TrajectorySample&, const TrajectorySample&) = default;
};

/**
 * Time-indexed per-group populations. Monte Carlo tables carry means in
 * `samples` and sample standard deviations in `spread` (same times).
 */
struct TrajectoryTable {
    std::size_t groups = 0;
    std::vector<TrajectorySample> samples;
    std::vector<TrajectorySample> spread;

    std::size_t rows() const
    {
        return samples.size();
    }
    bool has_spread() const
    {
        return !spread.empty();
    }
    /// Times strictly increasing, row sizes consistent, populations >= 0.
    bool is_valid() const;

    friend bool operator==(const TrajectoryTable&, const TrajectoryTable&) = default;
};

/// Generic numeric table with named columns; the unit of CSV output.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::size_t column(const std::string& name) const; // throws DomainError if absent
};

/// header: time,S_1..S_m,A_1..A_m,D_1..D_m[,sd_S_1..sd_D_m]
Table to_table(const TrajectoryTable& traj);

/// Monte Carlo columns followed by ode_S_1..ode_D_m. Both tables must share sample times.
Table comparison_table(const TrajectoryTable& monte_carlo, const TrajectoryTable& ode);

/// Comma separated, header line first, values with 9 significant digits, NaN written as `nan`.
void write_csv(std::ostream& out, const Table& table);
void write_csv_file(const std::string& path, const Table& table);
Table read_csv(std::istream& in);

std::string format_value(double v);

} // namespace infodiff

#endif // INFODIFF_TRAJECTORY_HPP
