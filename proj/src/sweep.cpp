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

#include "rispl/sweep.hpp"
#include "rispl/error.hpp"
#include "rispl/pathloss.hpp"
#include "rispl/units.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <thread>

namespace rispl
{
    namespace
    {
        struct FieldAccess
        {
            std::function<double(const Scenario &)> get;
            std::function<void(Scenario &, double)> set;
        };

        void set_tx_placement(Scenario &s, double range, double theta, double psi)
        {
            s.tx_placement = AngularPlacement(range, theta, psi);
        }

        void set_rx_placement(Scenario &s, double range, double theta, double psi)
        {
            s.rx_placement = AngularPlacement(range, theta, psi);
        }

        ReflectionCoefficient uniform_of(const Scenario &s)
        {
            auto c = s.panel.uniform_coefficient();
            if (!c)
                throw ValidationError({"panel has per-element coefficients; amplitude/phase overrides need a uniform panel"});
            return *c;
        }

        int as_count(double v)
        {
            if (v != std::floor(v))
                throw ValidationError({"element counts must be integers"});
            return static_cast<int>(v);
        }

        const std::map<std::string, FieldAccess, std::less<>> &field_table()
        {
            static const std::map<std::string, FieldAccess, std::less<>> table = {
                {"h_t_m", {[](const Scenario &s) { return s.geometry.tx_height; },
                           [](Scenario &s, double v) { s.geometry.tx_height = v; }}},
                {"h_r_m", {[](const Scenario &s) { return s.geometry.rx_height; },
                           [](Scenario &s, double v) { s.geometry.rx_height = v; }}},
                {"d_m", {[](const Scenario &s) { return s.geometry.distance; },
                         [](Scenario &s, double v) { s.geometry.distance = v; }}},
                {"h_m", {[](const Scenario &s) { return s.panel.height(); },
                         [](Scenario &s, double v) { s.panel.set_height(v); }}},
                {"dx_m", {[](const Scenario &s) { return s.panel.dx(); },
                          [](Scenario &s, double v) { s.panel.set_pitch(v, s.panel.dy()); }}},
                {"dy_m", {[](const Scenario &s) { return s.panel.dy(); },
                          [](Scenario &s, double v) { s.panel.set_pitch(s.panel.dx(), v); }}},
                {"rows", {[](const Scenario &s) { return static_cast<double>(s.panel.rows()); },
                          [](Scenario &s, double v) { s.panel.resize(as_count(v), s.panel.cols()); }}},
                {"cols", {[](const Scenario &s) { return static_cast<double>(s.panel.cols()); },
                          [](Scenario &s, double v) { s.panel.resize(s.panel.rows(), as_count(v)); }}},
                {"d1_m", {[](const Scenario &s) { return s.tx_placement.range(); },
                          [](Scenario &s, double v) {
                              set_tx_placement(s, v, s.tx_placement.theta(), s.tx_placement.psi());
                          }}},
                {"theta_t_rad", {[](const Scenario &s) { return s.tx_placement.theta(); },
                                 [](Scenario &s, double v) {
                                     set_tx_placement(s, s.tx_placement.range(), v, s.tx_placement.psi());
                                 }}},
                {"psi_t_rad", {[](const Scenario &s) { return s.tx_placement.psi(); },
                               [](Scenario &s, double v) {
                                   set_tx_placement(s, s.tx_placement.range(), s.tx_placement.theta(), v);
                               }}},
                {"d2_m", {[](const Scenario &s) { return s.rx_placement.range(); },
                          [](Scenario &s, double v) {
                              set_rx_placement(s, v, s.rx_placement.theta(), s.rx_placement.psi());
                          }}},
                {"theta_r_rad", {[](const Scenario &s) { return s.rx_placement.theta(); },
                                 [](Scenario &s, double v) {
                                     set_rx_placement(s, s.rx_placement.range(), v, s.rx_placement.psi());
                                 }}},
                {"psi_r_rad", {[](const Scenario &s) { return s.rx_placement.psi(); },
                               [](Scenario &s, double v) {
                                   set_rx_placement(s, s.rx_placement.range(), s.rx_placement.theta(), v);
                               }}},
                {"phi_rad", {[](const Scenario &s) { return uniform_of(s).phase(); },
                             [](Scenario &s, double v) {
                                 s.panel.set_uniform(ReflectionCoefficient(uniform_of(s).amplitude(), v));
                             }}},
                {"amplitude", {[](const Scenario &s) { return uniform_of(s).amplitude(); },
                               [](Scenario &s, double v) {
                                   s.panel.set_uniform(ReflectionCoefficient(v, uniform_of(s).phase()));
                               }}},
                {"frequency_hz", {[](const Scenario &s) { return s.frequency_hz; },
                                  [](Scenario &s, double v) { s.frequency_hz = v; }}},
                {"tx_power_dbm", {[](const Scenario &s) { return s.tx_power_dbm; },
                                  [](Scenario &s, double v) { s.tx_power_dbm = v; }}},
                {"gt_db", {[](const Scenario &s) { return linear_to_db(s.gains.tx); },
                           [](Scenario &s, double v) { s.gains.tx = db_to_linear(v); }}},
                {"gr_db", {[](const Scenario &s) { return linear_to_db(s.gains.rx); },
                           [](Scenario &s, double v) { s.gains.rx = db_to_linear(v); }}},
                {"g_cell_db", {[](const Scenario &s) { return linear_to_db(s.gains.cell); },
                               [](Scenario &s, double v) { s.gains.cell = db_to_linear(v); }}},
            };
            return table;
        }

        const FieldAccess &field_or_throw(std::string_view field)
        {
            const auto &table = field_table();
            auto it = table.find(field);
            if (it == table.end())
            {
                std::string known;
                for (const auto &[name, _] : table)
                    known += (known.empty() ? "" : ", ") + name;
                throw ValidationError({"unknown scenario field '" + std::string(field) + "' (known: " + known + ")"});
            }
            return it->second;
        }

        std::string csv_field(const std::string &v)
        {
            if (v.find_first_of(",\"\n") == std::string::npos)
                return v;
            std::string q = "\"";
            for (char c : v)
            {
                if (c == '"')
                    q += '"';
                q += c;
            }
            return q + "\"";
        }

        double round_g6(double v)
        {
            if (!std::isfinite(v))
                return v;
            return std::stod(format_g6(v));
        }
    } // namespace

    void set_scenario_field(Scenario &s, std::string_view field, double value) { field_or_throw(field).set(s, value); }

    double get_scenario_field(const Scenario &s, std::string_view field) { return field_or_throw(field).get(s); }

    const std::vector<std::string> &scenario_field_names()
    {
        static const std::vector<std::string> names = [] {
            std::vector<std::string> n;
            for (const auto &[name, _] : field_table())
                n.push_back(name);
            return n;
        }();
        return names;
    }

    std::string format_g6(double v)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return buf;
    }

    std::vector<double> linear_range(double first, double last, double step)
    {
        if (!(step != 0.0) || !std::isfinite(step))
            throw ValidationError({"sweep step must be a nonzero number"});
        if ((last - first) * step < 0.0)
            throw ValidationError({"sweep step points away from the range end"});
        const auto count = static_cast<std::size_t>(std::floor((last - first) / step + 1e-9)) + 1;
        std::vector<double> v(count);
        for (std::size_t i = 0; i < count; ++i)
            v[i] = first + step * static_cast<double>(i);
        return v;
    }

    std::vector<std::string> SweepSpec::violations() const
    {
        std::vector<std::string> issues;
        if (values.empty())
            issues.emplace_back("sweep needs at least one value");
        const bool increasing = std::adjacent_find(values.begin(), values.end(), std::greater_equal<>()) == values.end();
        const bool decreasing = std::adjacent_find(values.begin(), values.end(), std::less_equal<>()) == values.end();
        if (!increasing && !decreasing)
            issues.emplace_back("sweep values must be strictly monotonic");
        const auto &table = field_table();
        if (table.find(parameter) == table.end())
            issues.push_back("swept parameter '" + parameter + "' is not a scenario field");
        for (const auto &v : variants)
            for (const auto &o : v.overrides)
                if (table.find(o.field) == table.end())
                    issues.push_back("variant '" + v.name + "' overrides unknown field '" + o.field + "'");
        if (channels.empty())
            issues.emplace_back("sweep needs at least one output channel");
        return issues;
    }

    Scenario sweep_point(const SweepSpec &spec, const Variant &variant, double value)
    {
        Scenario s = spec.base;
        for (const auto &o : variant.overrides)
            set_scenario_field(s, o.field, o.value);
        set_scenario_field(s, spec.parameter, value);
        if (spec.rx_height_offset)
            s.geometry.rx_height = s.geometry.tx_height + *spec.rx_height_offset;
        if (spec.link_distance_factor)
            s.geometry.distance = *spec.link_distance_factor *
                                  std::abs(2.0 * s.panel.height() - s.geometry.tx_height - s.geometry.rx_height);
        return s;
    }

    std::vector<SweepRow> run_sweep(const SweepSpec &spec, unsigned threads)
    {
        if (auto issues = spec.violations(); !issues.empty())
            throw ValidationError(std::move(issues));

        const std::vector<Variant> variants = spec.variants.empty() ? std::vector<Variant>{{"base", {}}} : spec.variants;
        const std::size_t per_variant = spec.values.size();
        std::vector<SweepRow> rows(variants.size() * per_variant);
        std::vector<std::string> errors(rows.size());

        auto compute = [&](std::size_t i) {
            const Variant &variant = variants[i / per_variant];
            const double value = spec.values[i % per_variant];
            SweepRow &row = rows[i];
            row.variant = variant.name;
            row.parameter = spec.parameter;
            row.value = value;
            try
            {
                const Scenario point = sweep_point(spec, variant, value);
                for (Channel c : spec.channels)
                {
                    const PowerResult r = evaluate(restrict_to_channel(point, c), spec.model);
                    row.channels.push_back({c, r.pr_dbm, r.pl_db});
                }
            }
            catch (const Error &e)
            {
                errors[i] = "variant '" + variant.name + "', " + spec.parameter + "=" + format_g6(value) + ": " +
                            e.what();
            }
        };

        const unsigned workers = std::clamp(threads, 1u, static_cast<unsigned>(std::max<std::size_t>(rows.size(), 1)));
        if (workers == 1)
        {
            for (std::size_t i = 0; i < rows.size(); ++i)
                compute(i);
        }
        else
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    for (std::size_t i = w; i < rows.size(); i += workers)
                        compute(i);
                });
        }

        for (const auto &e : errors)
            if (!e.empty())
                throw SweepError("sweep aborted at " + e);
        return rows;
    }

    const std::vector<std::string> &preset_names()
    {
        static const std::vector<std::string> names = {"fig3a", "fig3b", "fig4a", "fig4b"};
        return names;
    }

    SweepSpec preset(std::string_view name)
    {
        const std::vector<Channel> all_channels = {Channel::combined, Channel::direct_only, Channel::ris_only};
        SweepSpec spec;
        spec.base = reference_scenario();
        spec.channels = all_channels;
        spec.link_distance_factor = 5.0;

        if (name == "fig3a" || name == "fig3b")
        {
            // Transmitter close to the panel, receiver moving away.
            spec.model = Kernel::near_field;
            set_scenario_field(spec.base, "d1_m", 2.0);
            set_scenario_field(spec.base, "h_m", 10.0);
            spec.parameter = "d2_m";
            spec.values = linear_range(20.0, 200.0, 2.0);
            if (name == "fig3a")
            {
                spec.variants = {{"phi=0", {{"phi_rad", 0.0}}},
                                 {"phi=pi/4", {{"phi_rad", pi / 4.0}}},
                                 {"phi=pi/2", {{"phi_rad", pi / 2.0}}},
                                 {"phi=3pi/4", {{"phi_rad", 3.0 * pi / 4.0}}}};
            }
            else
            {
                const std::pair<const char *, double> phases[] = {{"0", 0.0}, {"pi/4", pi / 4.0}};
                for (const auto &[label, phi] : phases)
                    for (double h : {0.0, 10.0, 15.0})
                        spec.variants.push_back({"phi=" + std::string(label) + "/h=" + format_g6(h),
                                                 {{"phi_rad", phi}, {"h_m", h}}});
            }
            return spec;
        }
        if (name == "fig4a")
        {
            spec.model = Kernel::far_field;
            spec.parameter = "d2_m";
            spec.values = linear_range(100.0, 300.0, 5.0);
            for (double d1 : {100.0, 200.0})
                for (double h : {10.0, 20.0})
                    spec.variants.push_back(
                        {"d1=" + format_g6(d1) + "/h=" + format_g6(h), {{"d1_m", d1}, {"h_m", h}, {"phi_rad", 0.0}}});
            return spec;
        }
        if (name == "fig4b")
        {
            spec.model = Kernel::far_field;
            spec.parameter = "h_t_m";
            spec.values = linear_range(1.0, 10.0, 1.0);
            spec.rx_height_offset = 1.0;
            for (double h : {10.0, 20.0})
                spec.variants.push_back({"h=" + format_g6(h), {{"h_m", h}, {"phi_rad", 0.0}}});
            return spec;
        }

        std::string known;
        for (const auto &n : preset_names())
            known += (known.empty() ? "" : ", ") + n;
        throw ValidationError({"unknown preset '" + std::string(name) + "' (valid presets: " + known + ")"});
    }

    void write_csv(std::ostream &os, const std::vector<SweepRow> &rows)
    {
        os << "variant,param,value,channel,pr_dbm,pl_db\n";
        for (const auto &r : rows)
            for (const auto &c : r.channels)
                os << csv_field(r.variant) << ',' << csv_field(r.parameter) << ',' << format_g6(r.value) << ','
                   << to_string(c.channel) << ',' << format_g6(c.pr_dbm) << ',' << format_g6(c.pl_db) << '\n';
    }

    void write_json(std::ostream &os, const std::vector<SweepRow> &rows)
    {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto &r : rows)
            for (const auto &c : r.channels)
            {
                nlohmann::ordered_json o;
                o["variant"] = r.variant;
                o["param"] = r.parameter;
                o["value"] = round_g6(r.value);
                o["channel"] = std::string(to_string(c.channel));
                o["pr_dbm"] = round_g6(c.pr_dbm);
                o["pl_db"] = round_g6(c.pl_db);
                out.push_back(std::move(o));
            }
        os << out.dump(2) << '\n';
    }

} // namespace rispl
