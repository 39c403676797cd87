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

#ifndef RISPL_SWEEP_HPP
#define RISPL_SWEEP_HPP

#include "rispl/error.hpp"
#include "rispl/scenario.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rispl
{
    /// Assigns a named scalar field of a scenario. Lengths in meters, angles in radians.
    /// Known names are listed by scenario_field_names(). Throws ValidationError for unknown names.
    void set_scenario_field(Scenario &s, std::string_view field, double value);
    double get_scenario_field(const Scenario &s, std::string_view field);
    const std::vector<std::string> &scenario_field_names();

    struct Override
    {
        std::string field;
        double value = 0.0;
    };

    struct Variant
    {
        std::string name;
        std::vector<Override> overrides;
    };

    struct SweepSpec
    {
        Scenario base;
        std::string parameter;
        std::vector<double> values;
        std::vector<Variant> variants;
        Kernel model = Kernel::general;
        std::vector<Channel> channels{Channel::combined};

        /// When set, d = factor * |2h - h_t - h_r| after overrides and the swept value are applied.
        std::optional<double> link_distance_factor;
        /// When set, h_r = h_t + offset after overrides and the swept value are applied.
        std::optional<double> rx_height_offset;

        std::vector<std::string> violations() const;
    };

    struct ChannelPower
    {
        Channel channel = Channel::combined;
        double pr_dbm = 0.0;
        double pl_db = 0.0;
    };

    /// One (variant, value) point with every requested channel.
    struct SweepRow
    {
        std::string variant;
        std::string parameter;
        double value = 0.0;
        std::vector<ChannelPower> channels;
    };

    /// Raised when one point of a sweep fails; the message names the variant and value.
    class SweepError : public Error
    {
    public:
        using Error::Error;
    };

    /// Scenario evaluated at one (variant, value) point, with the coupling rules applied.
    Scenario sweep_point(const SweepSpec &spec, const Variant &variant, double value);

    /// Rows ordered by variant, then by value. Throws ValidationError for an invalid spec and
    /// SweepError when a point cannot be evaluated.
    std::vector<SweepRow> run_sweep(const SweepSpec &spec, unsigned threads = 1);

    const std::vector<std::string> &preset_names();
    /// fig3a, fig3b, fig4a or fig4b. Throws ValidationError naming the valid presets otherwise.
    SweepSpec preset(std::string_view name);

    /// Evenly spaced values from `first` to `last` inclusive.
    std::vector<double> linear_range(double first, double last, double step);

    /// Header `variant,param,value,channel,pr_dbm,pl_db`, one line per channel, 6 significant digits.
    void write_csv(std::ostream &os, const std::vector<SweepRow> &rows);
    /// Array of objects with the CSV field names.
    void write_json(std::ostream &os, const std::vector<SweepRow> &rows);

    /// printf("%.6g") formatting used by every text output.
    std::string format_g6(double v);

} // namespace rispl

#endif
