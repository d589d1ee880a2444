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
#include "infodiff/trajectory.hpp"
#include "infodiff/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace infodiff
{

namespace
{

double sum(const std::vector<double>& v)
{
    return std::accumulate(v.begin(), v.end(), 0.0);
}

void append_group_columns(std::vector<std::string>& header, const std::string& prefix, std::size_t m)
{
    for (const char* name : {"S", "A", "D"}) {
        for (std::size_t i = 1; i <= m; ++i) {
            header.push_back(prefix + name + "_" + std::to_string(i));
        }
    }
}

void append_values(std::vector<double>& row, const TrajectorySample& sample)
{
    row.insert(row.end(), sample.s.begin(), sample.s.end());
    row.insert(row.end(), sample.a.begin(), sample.a.end());
    row.insert(row.end(), sample.dd.begin(), sample.dd.end());
}

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

double TrajectorySample::total_active() const
{
    return sum(a);
}

double TrajectorySample::total_deactivated() const
{
    return sum(dd);
}

double TrajectorySample::total() const
{
    return sum(s) + sum(a) + sum(dd);
}

bool TrajectoryTable::is_valid() const
{
    for (std::size_t r = 0; r < samples.size(); ++r) {
        const auto& row = samples[r];
        if (row.s.size() != groups || row.a.size() != groups || row.dd.size() != groups) {
            return false;
        }
        if (r > 0 && !(row.t > samples[r - 1].t)) {
            return false;
        }
        for (const auto* v : {&row.s, &row.a, &row.dd}) {
            if (std::any_of(v->begin(), v->end(), [](double x) {
                    return !(x >= 0.0);
                })) {
                return false;
            }
        }
    }
    if (!spread.empty()) {
        if (spread.size() != samples.size()) {
            return false;
        }
        for (std::size_t r = 0; r < spread.size(); ++r) {
            if (spread[r].t != samples[r].t || spread[r].s.size() != groups) {
                return false;
            }
        }
    }
    return true;
}

std::size_t Table::column(const std::string& name) const
{
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
        throw DomainError("table has no column '" + name + "'");
    }
    return static_cast<std::size_t>(it - header.begin());
}

Table to_table(const TrajectoryTable& traj)
{
    Table table;
    table.header.push_back("time");
    append_group_columns(table.header, "", traj.groups);
    if (traj.has_spread()) {
        append_group_columns(table.header, "sd_", traj.groups);
    }
    table.rows.reserve(traj.rows());
    for (std::size_t r = 0; r < traj.rows(); ++r) {
        std::vector<double> row{traj.samples[r].t};
        append_values(row, traj.samples[r]);
        if (traj.has_spread()) {
            append_values(row, traj.spread[r]);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table comparison_table(const TrajectoryTable& monte_carlo, const TrajectoryTable& ode)
{
    if (monte_carlo.rows() != ode.rows() || monte_carlo.groups != ode.groups) {
        throw DomainError("comparison_table: tables differ in shape");
    }
    Table table = to_table(monte_carlo);
    append_group_columns(table.header, "ode_", ode.groups);
    for (std::size_t r = 0; r < ode.rows(); ++r) {
        if (std::abs(ode.samples[r].t - monte_carlo.samples[r].t) > 1e-9 * std::max(1.0, ode.samples[r].t)) {
            throw DomainError("comparison_table: sample times differ");
        }
        append_values(table.rows[r], ode.samples[r]);
    }
    return table;
}

std::string format_value(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void write_csv(std::ostream& out, const Table& table)
{
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        out << (c ? "," : "") << table.header[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << format_value(row[c]);
        }
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const Table& table)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write_csv(out, table);
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

Table read_csv(std::istream& in)
{
    Table table;
    std::string line;
    if (!std::getline(in, line)) {
        throw DomainError("read_csv: empty input");
    }
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            table.header.push_back(trim(cell));
        }
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cell = trim(cell);
            if (cell == "nan") {
                row.push_back(std::nan(""));
                continue;
            }
            std::size_t used = 0;
            double v         = 0.0;
            try {
                v = std::stod(cell, &used);
            }
            catch (const std::exception&) {
                used = 0;
            }
            if (used != cell.size() || cell.empty()) {
                throw DomainError("read_csv: bad number '" + cell + "' on line " + std::to_string(line_no));
            }
            row.push_back(v);
        }
        if (row.size() != table.header.size()) {
            throw DomainError("read_csv: line " + std::to_string(line_no) + " has " + std::to_string(row.size()) +
                              " fields, header has " + std::to_string(table.header.size()));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace infodiff
