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

#include "rispl/scenario_io.hpp"
#include "rispl/error.hpp"
#include "rispl/units.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace rispl
{
    namespace
    {
        using json = nlohmann::json;

        // Collects every problem in the document instead of stopping at the first one.
        class Reader
        {
        public:
            std::vector<std::string> issues;

            void check_keys(const json &obj, const std::string &where, const std::set<std::string> &allowed)
            {
                for (auto it = obj.begin(); it != obj.end(); ++it)
                    if (!allowed.count(it.key()))
                        issues.push_back("unknown key '" + where + it.key() + "'");
            }

            const json *object(const json &parent, const std::string &key, const std::string &where)
            {
                auto it = parent.find(key);
                if (it == parent.end())
                    return nullptr;
                if (!it->is_object())
                {
                    issues.push_back("'" + where + key + "' must be an object");
                    return nullptr;
                }
                return &*it;
            }

            double number(const json *obj, const std::string &key, double fallback, const std::string &where)
            {
                if (!obj)
                    return fallback;
                auto it = obj->find(key);
                if (it == obj->end())
                    return fallback;
                if (!it->is_number())
                {
                    issues.push_back("'" + where + key + "' must be a number");
                    return fallback;
                }
                return it->get<double>();
            }

            bool has(const json *obj, const std::string &key) const { return obj && obj->contains(key); }

            int integer(const json *obj, const std::string &key, int fallback, const std::string &where)
            {
                if (!obj)
                    return fallback;
                auto it = obj->find(key);
                if (it == obj->end())
                    return fallback;
                if (!it->is_number_integer())
                {
                    issues.push_back("'" + where + key + "' must be an integer");
                    return fallback;
                }
                return it->get<int>();
            }

            PatternModel pattern(const json *obj, const std::string &key, const std::string &where)
            {
                if (!obj || !obj->contains(key))
                    return PatternModel::unity();
                const json &p = obj->at(key);
                if (p.is_string() && p.get<std::string>() == "unity")
                    return PatternModel::unity();
                if (p.is_object())
                {
                    check_keys(p, where + key + ".", {"cos_q"});
                    const double q = number(&p, "cos_q", 0.0, where + key + ".");
                    if (!p.contains("cos_q"))
                        issues.push_back("'" + where + key + "' needs a 'cos_q' exponent");
                    try
                    {
                        return PatternModel::cosine_power(q);
                    }
                    catch (const Error &e)
                    {
                        issues.push_back("'" + where + key + "': " + e.what());
                    }
                    return PatternModel::unity();
                }
                issues.push_back("'" + where + key + "' must be \"unity\" or {\"cos_q\": q}");
                return PatternModel::unity();
            }

            std::optional<ReflectionCoefficient> coefficient(const json &c, const std::string &where)
            {
                if (!c.is_object())
                {
                    issues.push_back("'" + where + "' must be an object");
                    return std::nullopt;
                }
                check_keys(c, where + ".", {"amplitude", "phase_rad"});
                const double a = number(&c, "amplitude", 1.0, where + ".");
                const double phi = number(&c, "phase_rad", 0.0, where + ".");
                try
                {
                    return ReflectionCoefficient(a, phi);
                }
                catch (const Error &e)
                {
                    issues.push_back("'" + where + "': " + e.what());
                }
                return std::nullopt;
            }
        };

        json pattern_to_json(const PatternModel &p)
        {
            if (p.is_unity())
                return "unity";
            return json{{"cos_q", p.exponent()}};
        }
    } // namespace

    Scenario parse_scenario(std::string_view text)
    {
        json doc;
        try
        {
            doc = json::parse(text);
        }
        catch (const json::parse_error &e)
        {
            throw ValidationError({std::string("scenario is not valid JSON: ") + e.what()});
        }
        if (!doc.is_object())
            throw ValidationError({"scenario document must be a JSON object"});

        Reader rd;
        const Scenario ref = reference_scenario();
        Scenario s = ref;

        rd.check_keys(doc, "", {"frequency_ghz", "tx_power_dbm", "geometry", "panel", "placement", "gains_db",
                                "patterns", "include_direct", "direct_pattern"});

        s.frequency_hz = rd.number(&doc, "frequency_ghz", ref.frequency_hz / 1e9, "") * 1e9;
        s.tx_power_dbm = rd.number(&doc, "tx_power_dbm", ref.tx_power_dbm, "");
        s.direct_pattern = rd.number(&doc, "direct_pattern", 1.0, "");
        if (doc.contains("include_direct"))
        {
            if (doc["include_direct"].is_boolean())
                s.include_direct = doc["include_direct"].get<bool>();
            else
                rd.issues.emplace_back("'include_direct' must be a boolean");
        }

        // panel
        const json *panel = rd.object(doc, "panel", "");
        if (panel)
            rd.check_keys(*panel, "panel.", {"rows", "cols", "dx_m", "dy_m", "h_m", "reflection", "per_element"});
        const int rows = rd.integer(panel, "rows", ref.panel.rows(), "panel.");
        const int cols = rd.integer(panel, "cols", ref.panel.cols(), "panel.");
        const double dx = rd.number(panel, "dx_m", ref.panel.dx(), "panel.");
        const double dy = rd.number(panel, "dy_m", ref.panel.dy(), "panel.");
        const double h = rd.number(panel, "h_m", ref.panel.height(), "panel.");
        ReflectionCoefficient uniform = *ref.panel.uniform_coefficient();
        std::vector<ReflectionCoefficient> per_element;
        if (rd.has(panel, "reflection") && rd.has(panel, "per_element"))
            rd.issues.emplace_back("'panel' may hold either 'reflection' or 'per_element', not both");
        if (rd.has(panel, "reflection"))
        {
            if (auto c = rd.coefficient(panel->at("reflection"), "panel.reflection"))
                uniform = *c;
        }
        else if (rd.has(panel, "per_element"))
        {
            const json &arr = panel->at("per_element");
            if (!arr.is_array())
                rd.issues.emplace_back("'panel.per_element' must be an array");
            else
                for (std::size_t i = 0; i < arr.size(); ++i)
                    if (auto c = rd.coefficient(arr[i], "panel.per_element[" + std::to_string(i) + "]"))
                        per_element.push_back(*c);
        }
        try
        {
            s.panel = per_element.empty() ? RisPanel(rows, cols, dx, dy, h, uniform)
                                          : RisPanel(rows, cols, dx, dy, h, std::move(per_element));
        }
        catch (const ValidationError &e)
        {
            rd.issues.insert(rd.issues.end(), e.issues().begin(), e.issues().end());
        }

        // geometry
        const json *geometry = rd.object(doc, "geometry", "");
        if (geometry)
            rd.check_keys(*geometry, "geometry.", {"h_t_m", "h_r_m", "d_m"});
        s.geometry.tx_height = rd.number(geometry, "h_t_m", ref.geometry.tx_height, "geometry.");
        s.geometry.rx_height = rd.number(geometry, "h_r_m", ref.geometry.rx_height, "geometry.");
        s.geometry.distance =
            rd.number(geometry, "d_m", 5.0 * std::abs(2.0 * h - s.geometry.tx_height - s.geometry.rx_height),
                      "geometry.");

        // placement
        const json *placement = rd.object(doc, "placement", "");
        if (placement)
            rd.check_keys(*placement, "placement.",
                          {"d1_m", "theta_t_deg", "psi_t_deg", "d2_m", "theta_r_deg", "psi_r_deg"});
        try
        {
            s.tx_placement =
                AngularPlacement(rd.number(placement, "d1_m", ref.tx_placement.range(), "placement."),
                                 deg_to_rad(rd.number(placement, "theta_t_deg", rad_to_deg(ref.tx_placement.theta()),
                                                      "placement.")),
                                 deg_to_rad(rd.number(placement, "psi_t_deg", rad_to_deg(ref.tx_placement.psi()),
                                                      "placement.")));
        }
        catch (const DomainError &e)
        {
            rd.issues.push_back(std::string("transmitter placement: ") + e.what());
        }
        try
        {
            s.rx_placement =
                AngularPlacement(rd.number(placement, "d2_m", ref.rx_placement.range(), "placement."),
                                 deg_to_rad(rd.number(placement, "theta_r_deg", rad_to_deg(ref.rx_placement.theta()),
                                                      "placement.")),
                                 deg_to_rad(rd.number(placement, "psi_r_deg", rad_to_deg(ref.rx_placement.psi()),
                                                      "placement.")));
        }
        catch (const DomainError &e)
        {
            rd.issues.push_back(std::string("receiver placement: ") + e.what());
        }

        // gains
        const json *gains = rd.object(doc, "gains_db", "");
        if (gains)
            rd.check_keys(*gains, "gains_db.", {"gt", "gr", "g_cell"});
        s.gains = GainSet::from_db(rd.number(gains, "gt", 21.0, "gains_db."), rd.number(gains, "gr", 21.0, "gains_db."),
                                   rd.number(gains, "g_cell", 0.0, "gains_db."));

        // patterns
        const json *patterns = rd.object(doc, "patterns", "");
        if (patterns)
            rd.check_keys(*patterns, "patterns.", {"tx", "cell", "rx"});
        s.patterns.tx = rd.pattern(patterns, "tx", "patterns.");
        s.patterns.cell = rd.pattern(patterns, "cell", "patterns.");
        s.patterns.rx = rd.pattern(patterns, "rx", "patterns.");

        for (auto &v : s.violations())
            rd.issues.push_back(std::move(v));
        if (!rd.issues.empty())
            throw ValidationError(std::move(rd.issues));
        return s;
    }

    Scenario load_scenario(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw Error("cannot open scenario file '" + path.string() + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_scenario(buf.str());
    }

    std::string scenario_to_json(const Scenario &s, int indent)
    {
        nlohmann::ordered_json doc;
        doc["frequency_ghz"] = s.frequency_hz / 1e9;
        doc["tx_power_dbm"] = s.tx_power_dbm;
        doc["geometry"] = {{"h_t_m", s.geometry.tx_height}, {"h_r_m", s.geometry.rx_height}, {"d_m", s.geometry.distance}};

        nlohmann::ordered_json panel = {{"rows", s.panel.rows()}, {"cols", s.panel.cols()}, {"dx_m", s.panel.dx()},
                                        {"dy_m", s.panel.dy()},   {"h_m", s.panel.height()}};
        if (auto u = s.panel.uniform_coefficient())
        {
            panel["reflection"] = {{"amplitude", u->amplitude()}, {"phase_rad", u->phase()}};
        }
        else
        {
            auto arr = nlohmann::ordered_json::array();
            for (int n = s.panel.min_row(); n <= s.panel.max_row(); ++n)
                for (int m = s.panel.min_col(); m <= s.panel.max_col(); ++m)
                {
                    const auto &c = s.panel.coefficient(n, m);
                    arr.push_back({{"amplitude", c.amplitude()}, {"phase_rad", c.phase()}});
                }
            panel["per_element"] = std::move(arr);
        }
        doc["panel"] = std::move(panel);

        doc["placement"] = {{"d1_m", s.tx_placement.range()},
                            {"theta_t_deg", rad_to_deg(s.tx_placement.theta())},
                            {"psi_t_deg", rad_to_deg(s.tx_placement.psi())},
                            {"d2_m", s.rx_placement.range()},
                            {"theta_r_deg", rad_to_deg(s.rx_placement.theta())},
                            {"psi_r_deg", rad_to_deg(s.rx_placement.psi())}};
        doc["gains_db"] = {{"gt", linear_to_db(s.gains.tx)},
                           {"gr", linear_to_db(s.gains.rx)},
                           {"g_cell", linear_to_db(s.gains.cell)}};
        doc["patterns"] = {{"tx", pattern_to_json(s.patterns.tx)},
                           {"cell", pattern_to_json(s.patterns.cell)},
                           {"rx", pattern_to_json(s.patterns.rx)}};
        doc["include_direct"] = s.include_direct;
        doc["direct_pattern"] = s.direct_pattern;
        return doc.dump(indent);
    }

} // namespace rispl
