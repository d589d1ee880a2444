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
#include "infodiff/trajectory.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace infodiff;

namespace
{

TrajectoryTable two_rows(bool spread)
{
    TrajectoryTable t;
    t.groups  = 2;
    t.samples = {{0.0, {30, 42}, {20, 8}, {0, 0}}, {0.5, {1.0 / 3.0, 2}, {3, 4}, {5, 6e-7}}};
    if (spread) {
        t.spread = {{0.0, {0, 0}, {0, 0}, {0, 0}}, {0.5, {0.1, 0.2}, {0.3, 0.4}, {0.5, 0.6}}};
    }
    return t;
}

} // namespace

TEST_CASE("csv layout")
{
    std::ostringstream out;
    write_csv(out, to_table(two_rows(false)));
    CHECK(out.str() == "time,S_1,S_2,A_1,A_2,D_1,D_2\n"
                       "0,30,42,20,8,0,0\n"
                       "0.5,0.333333333,2,3,4,5,6e-07\n");

    const Table with_spread = to_table(two_rows(true));
    CHECK(with_spread.header.size() == 13);
    CHECK(with_spread.header[7] == "sd_S_1");
    CHECK(with_spread.header[12] == "sd_D_2");
    CHECK(with_spread.column("sd_A_2") == 10);
    CHECK_THROWS_AS(with_spread.column("E_1"), DomainError);
}

TEST_CASE("value formatting")
{
    CHECK(format_value(0.0241666666667) == "0.0241666667");
    CHECK(format_value(123456789012.0) == "1.23456789e+11");
    CHECK(format_value(std::nan("")) == "nan");
    CHECK(format_value(-2.5) == "-2.5");
}

TEST_CASE("comparison columns")
{
    const Table t = comparison_table(two_rows(true), two_rows(false));
    CHECK(t.header.size() == 19);
    CHECK(t.header[13] == "ode_S_1");
    CHECK(t.rows[1][t.column("ode_A_2")] == 4.0);

    TrajectoryTable shifted = two_rows(false);
    shifted.samples[1].t    = 0.75;
    CHECK_THROWS_AS(comparison_table(two_rows(true), shifted), DomainError);
    TrajectoryTable shorter = two_rows(false);
    shorter.samples.pop_back();
    CHECK_THROWS_AS(comparison_table(two_rows(true), shorter), DomainError);
}

TEST_CASE("read back")
{
    std::ostringstream out;
    Table t  = to_table(two_rows(true));
    t.rows[1][3] = std::nan("");
    write_csv(out, t);
    std::istringstream in(out.str());
    const Table back = read_csv(in);
    CHECK(back.header == t.header);
    REQUIRE(back.rows.size() == 2);
    CHECK(back.rows[1][1] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(std::isnan(back.rows[1][3]));

    std::istringstream ragged("time,S_1\n0,1,2\n");
    CHECK_THROWS_AS(read_csv(ragged), DomainError);
    std::istringstream junk("time,S_1\n0,abc\n");
    CHECK_THROWS_AS(read_csv(junk), DomainError);
}

TEST_CASE("table validity")
{
    CHECK(two_rows(true).is_valid());
    TrajectoryTable bad = two_rows(false);
    bad.samples[1].t    = 0.0;
    CHECK_FALSE(bad.is_valid());
    bad              = two_rows(false);
    bad.samples[1].a = {-1.0, 0.0};
    CHECK_FALSE(bad.is_valid());
    bad = two_rows(true);
    bad.spread.pop_back();
    CHECK_FALSE(bad.is_valid());
}

TEST_CASE("unwritable path")
{
    CHECK_THROWS_AS(write_csv_file("/nonexistent-dir/out.csv", to_table(two_rows(false))), IoError);
}
