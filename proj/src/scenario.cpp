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

#include "rispl/scenario.hpp"
#include "rispl/error.hpp"
#include "rispl/units.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace rispl
{
    double Scenario::wavelength() const { return wavelength_from_frequency(frequency_hz); }

    double Scenario::tx_power_w() const { return dbm_to_watts(tx_power_dbm); }

    std::vector<std::string> Scenario::violations() const
    {
        std::vector<std::string> issues = geometry.violations();
        for (auto &i : panel.violations())
            issues.push_back(std::move(i));
        if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
            issues.emplace_back("carrier frequency must be positive");
        if (!std::isfinite(tx_power_dbm))
            issues.emplace_back("transmit power must be finite");
        if (!gains.valid())
            issues.emplace_back("antenna and cell gains must be strictly positive");
        if (!(direct_pattern >= 0.0 && direct_pattern <= 1.0))
            issues.emplace_back("direct-path pattern F_direct must lie in [0, 1]");
        return issues;
    }

    void Scenario::validate() const
    {
        if (auto issues = violations(); !issues.empty())
            throw ValidationError(std::move(issues));
    }

    PowerResult PowerResult::from_watts(double watts, double tx_power_dbm)
    {
        if (!(watts >= 0.0) || !std::isfinite(watts))
            throw DomainError("received power must be finite and nonnegative");
        PowerResult r;
        r.pr_watts = watts;
        r.pr_dbm = watts > 0.0 ? watts_to_dbm(watts) : -std::numeric_limits<double>::infinity();
        r.pl_db = path_loss_db(tx_power_dbm, r.pr_dbm);
        return r;
    }

    std::string_view to_string(Kernel k)
    {
        switch (k)
        {
        case Kernel::general:
            return "general";
        case Kernel::far_field:
            return "far-field";
        case Kernel::far_field_max:
            return "far-field-max";
        case Kernel::near_field:
            return "near-field";
        case Kernel::two_ray:
            return "two-ray";
        }
        return "?";
    }

    std::string_view to_string(Channel c)
    {
        switch (c)
        {
        case Channel::combined:
            return "combined";
        case Channel::direct_only:
            return "direct_only";
        case Channel::ris_only:
            return "ris_only";
        }
        return "?";
    }

    namespace
    {
        std::string normalized(std::string_view name)
        {
            std::string s(name);
            for (auto &ch : s)
                if (ch == '-')
                    ch = '_';
            return s;
        }
    } // namespace

    Kernel kernel_from_string(std::string_view name)
    {
        const std::string s = normalized(name);
        if (s == "general")
            return Kernel::general;
        if (s == "far_field")
            return Kernel::far_field;
        if (s == "far_field_max")
            return Kernel::far_field_max;
        if (s == "near_field")
            return Kernel::near_field;
        if (s == "two_ray")
            return Kernel::two_ray;
        throw ValidationError({"unknown model '" + std::string(name) +
                               "' (expected general, far-field, far-field-max, near-field or two-ray)"});
    }

    Channel channel_from_string(std::string_view name)
    {
        const std::string s = normalized(name);
        if (s == "combined")
            return Channel::combined;
        if (s == "direct" || s == "direct_only")
            return Channel::direct_only;
        if (s == "ris" || s == "ris_only")
            return Channel::ris_only;
        throw ValidationError({"unknown channel '" + std::string(name) + "' (expected combined, direct or ris)"});
    }

    Scenario restrict_to_channel(const Scenario &s, Channel c)
    {
        Scenario out = s;
        switch (c)
        {
        case Channel::combined:
            break;
        case Channel::direct_only: {
            const double phase = s.panel.uniform_coefficient().value_or(ReflectionCoefficient{}).phase();
            out.panel.set_uniform(ReflectionCoefficient(0.0, phase));
            break;
        }
        case Channel::ris_only:
            out.include_direct = false;
            break;
        }
        return out;
    }

    Scenario reference_scenario()
    {
        Scenario s;
        s.geometry = {2.0, 3.0, 0.0};
        s.panel = RisPanel(100, 102, 0.01, 0.01, 10.0, ReflectionCoefficient(1.0, 0.0));
        s.geometry.distance = 5.0 * std::abs(2.0 * s.panel.height() - s.geometry.tx_height - s.geometry.rx_height);
        s.tx_placement = AngularPlacement(100.0, pi / 4.0, pi);
        s.rx_placement = AngularPlacement(100.0, pi / 4.0, 0.0);
        s.gains = GainSet::from_db(21.0, 21.0, 0.0);
        s.frequency_hz = 10.5e9;
        s.tx_power_dbm = 10.0;
        s.include_direct = true;
        return s;
    }

    GeometricResidual geometric_residual(const Scenario &s)
    {
        GeometricResidual r;
        const double h = s.panel.height();
        r.path_sum = s.tx_placement.range() + s.rx_placement.range() -
                     std::hypot(2.0 * h - s.geometry.tx_height - s.geometry.rx_height, s.geometry.distance);
        const double tx_x = s.tx_placement.range() * std::sin(s.tx_placement.theta()) * std::cos(s.tx_placement.psi());
        const double tx_y = s.tx_placement.range() * std::sin(s.tx_placement.theta()) * std::sin(s.tx_placement.psi());
        const double rx_x = s.rx_placement.range() * std::sin(s.rx_placement.theta()) * std::cos(s.rx_placement.psi());
        const double rx_y = s.rx_placement.range() * std::sin(s.rx_placement.theta()) * std::sin(s.rx_placement.psi());
        r.ground_separation = std::hypot(tx_x - rx_x, tx_y - rx_y) - s.geometry.distance;
        return r;
    }

} // namespace rispl
