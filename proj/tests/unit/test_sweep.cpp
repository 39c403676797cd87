// SPDX-License-Identifier: Apache-2.0
//
// rispl: path loss modelling for elevated RIS-assisted wireless links
// Copyright (C) 2026 The rispl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "rispl/error.hpp"
#include "rispl/pathloss.hpp"
#include "rispl/sweep.hpp"

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <map>
#include <sstream>

using namespace rispl;
using Catch::Approx;

namespace
{
    std::map<std::string, double> power_by_channel(const SweepRow &r)
    {
        std::map<std::string, double> out;
        for (const auto &c : r.channels)
            out[std::string(to_string(c.channel))] = c.pr_dbm;
        return out;
    }

    std::string csv_of(const std::vector<SweepRow> &rows)
    {
        std::ostringstream os;
        write_csv(os, rows);
        return os.str();
    }
}

TEST_CASE("scenario fields round trip", "[sweep]")
{
    for (const auto &name : scenario_field_names())
    {
        Scenario s = reference_scenario();
        double value = get_scenario_field(s, name);
        if (name == "rows" || name == "cols")
            value = 8.0;
        else if (name.find("theta") != std::string::npos || name == "amplitude")
            value = 0.5;
        else if (name.find("psi") != std::string::npos || name == "phi_rad")
            value = 1.25;
        else
            value = value == 0.0 ? 3.0 : value * 1.5;
        set_scenario_field(s, name, value);
        INFO(name);
        CHECK(get_scenario_field(s, name) == Approx(value));
    }
    Scenario s = reference_scenario();
    CHECK_THROWS(set_scenario_field(s, "nonsense", 1.0));
    CHECK_THROWS(get_scenario_field(s, "nonsense"));
}

TEST_CASE("linear ranges", "[sweep]")
{
    const auto v = linear_range(20.0, 200.0, 2.0);
    CHECK(v.size() == 91);
    CHECK(v.front() == 20.0);
    CHECK(v.back() == 200.0);
    CHECK(linear_range(100.0, 300.0, 5.0).size() == 41);
    CHECK(linear_range(5.0, 1.0, -1.0).size() == 5);
    CHECK(linear_range(5.0, 1.0, -1.0).back() == 1.0);
    CHECK(linear_range(3.0, 3.0, 1.0).size() == 1);
    CHECK_THROWS(linear_range(1.0, 5.0, 0.0));
    CHECK_THROWS(linear_range(1.0, 5.0, -1.0));
}

TEST_CASE("presets", "[sweep]")
{
    const SweepSpec a = preset("fig3a");
    CHECK(a.model == Kernel::near_field);
    CHECK(a.values.front() == 20.0);
    CHECK(a.values.back() == 200.0);
    CHECK(a.values.size() == 91);
    CHECK(a.variants.size() == 4);
    CHECK(a.channels.size() == 3);
    CHECK(preset("fig3b").variants.size() == 6);
    CHECK(preset("fig4b").parameter == "h_t_m");

    const SweepSpec f = preset("fig4a");
    CHECK(f.model == Kernel::far_field);
    for (const auto &v : f.variants)
        for (double value : f.values)
        {
            const Scenario s = sweep_point(f, v, value);
            CHECK(s.tx_placement.range() >= 100.0);
            CHECK(s.rx_placement.range() >= 100.0);
            CHECK(std::min(s.tx_placement.range(), s.rx_placement.range()) > 71.4);
        }

    try
    {
        preset("fig9");
        FAIL("unknown preset accepted");
    }
    catch (const ValidationError &e)
    {
        const std::string msg = e.what();
        CHECK(msg.find("fig3a") != std::string::npos);
        CHECK(msg.find("fig4b") != std::string::npos);
    }
}

TEST_CASE("sweep points apply the coupling rules", "[sweep]")
{
    const SweepSpec b = preset("fig3b");
    const Scenario s = sweep_point(b, b.variants[0], 40.0);
    CHECK(s.panel.height() == 0.0);
    CHECK(s.geometry.distance == Approx(25.0));
    CHECK(s.rx_placement.range() == 40.0);
    CHECK(s.tx_placement.range() == 2.0);

    const SweepSpec h = preset("fig4b");
    const Scenario t = sweep_point(h, h.variants[1], 4.0);
    CHECK(t.geometry.tx_height == 4.0);
    CHECK(t.geometry.rx_height == 5.0);
    CHECK(t.geometry.distance == Approx(5.0 * (40.0 - 9.0)));
}

TEST_CASE("sweep rows", "[sweep]")
{
    const SweepSpec a = preset("fig3a");
    const auto rows = run_sweep(a);
    REQUIRE(rows.size() == 4 * 91);
    CHECK(rows[0].variant == "phi=0");
    CHECK(rows[90].value == 200.0);
    CHECK(rows[91].variant == "phi=pi/4");
    for (const auto &r : rows)
        if (r.variant == "phi=0")
        {
            const auto p = power_by_channel(r);
            CHECK(p.at("combined") >= p.at("direct_only"));
            CHECK(p.at("combined") >= p.at("ris_only"));
        }

    SweepSpec one = a;
    one.values = {50.0};
    one.variants.resize(1);
    CHECK(run_sweep(one).size() == 1);
}

TEST_CASE("distance doubling in the far-field preset", "[sweep]")
{
    const auto rows = run_sweep(preset("fig4a"));
    std::map<std::pair<std::string, double>, double> ris;
    for (const auto &r : rows)
        ris[{r.variant, r.value}] = power_by_channel(r).at("ris_only");
    for (double d2 : {100.0, 200.0, 300.0})
        CHECK(ris.at({"d1=100/h=10", d2}) - ris.at({"d1=200/h=10", d2}) == Approx(6.0206).margin(0.3));
}

TEST_CASE("sweeps are deterministic", "[sweep]")
{
    const SweepSpec b = preset("fig3b");
    const std::string first = csv_of(run_sweep(b));
    CHECK(first == csv_of(run_sweep(b)));
    CHECK(first == csv_of(run_sweep(b, 4)));

    SweepSpec g = preset("fig4a");
    g.model = Kernel::general;
    g.values = {100.0, 150.0, 200.0};
    CHECK(csv_of(run_sweep(g, 1)) == csv_of(run_sweep(g, 3)));
}

TEST_CASE("sweep validation and failures", "[sweep]")
{
    SweepSpec s = preset("fig3a");
    s.values = {20.0, 20.0};
    CHECK_THROWS_AS(run_sweep(s), ValidationError);
    s = preset("fig3a");
    s.parameter = "bogus";
    s.variants[0].overrides.push_back({"nope", 1.0});
    CHECK(s.violations().size() == 2);
    s = preset("fig3a");
    s.values.clear();
    CHECK_FALSE(s.violations().empty());

    SweepSpec bad = preset("fig4a");
    bad.parameter = "h_m";
    bad.values = {2.0, 2.5, 3.0};
    bad.variants.resize(1);
    try
    {
        run_sweep(bad);
        FAIL("degenerate point accepted");
    }
    catch (const SweepError &e)
    {
        const std::string msg = e.what();
        CHECK(msg.find("h_m") != std::string::npos);
        CHECK(msg.find("2.5") != std::string::npos);
    }
}

TEST_CASE("csv and json output", "[sweep]")
{
    SweepRow r;
    r.variant = "a,\"b\"";
    r.parameter = "d2_m";
    r.value = 1.0 / 3.0;
    r.channels = {{Channel::combined, -22.123456789, 32.123456789}};
    const std::string csv = csv_of({r});
    CHECK(csv == "variant,param,value,channel,pr_dbm,pl_db\n\"a,\"\"b\"\"\",d2_m,0.333333,combined,-22.1235,32.1235\n");

    std::ostringstream os;
    write_json(os, {r});
    const auto j = nlohmann::json::parse(os.str());
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["variant"] == "a,\"b\"");
    CHECK(j[0]["channel"] == "combined");
    CHECK(j[0]["pr_dbm"].get<double>() == Approx(-22.1235));
    CHECK(j[0]["value"].get<double>() == Approx(0.333333));

    CHECK(format_g6(123456789.0) == "1.23457e+08");
    CHECK(format_g6(0.5) == "0.5");
}
