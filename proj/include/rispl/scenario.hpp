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

#ifndef RISPL_SCENARIO_HPP
#define RISPL_SCENARIO_HPP

#include "rispl/geometry.hpp"
#include "rispl/panel.hpp"
#include "rispl/radiation.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace rispl
{
    struct PatternSet
    {
        PatternModel tx = PatternModel::unity();
        PatternModel cell = PatternModel::unity();
        PatternModel rx = PatternModel::unity();

        bool all_unity() const { return tx.is_unity() && cell.is_unity() && rx.is_unity(); }
    };

    /// Complete description of one link.
    ///
    /// The terminal heights and separation (geometry) and the angular placements relative to the
    /// RIS are independent inputs; they are not required to describe the same physical layout.
    /// See geometric_residual() to measure how far apart they are.
    struct Scenario
    {
        LinkGeometry geometry;
        RisPanel panel;
        AngularPlacement tx_placement;
        AngularPlacement rx_placement;
        GainSet gains;
        PatternSet patterns;
        double frequency_hz = 10.5e9;
        double tx_power_dbm = 10.0;
        bool include_direct = true;
        double direct_pattern = 1.0; // F_direct^combine

        double wavelength() const;
        double tx_power_w() const;

        std::vector<std::string> violations() const;
        /// Throws ValidationError listing every violation.
        void validate() const;
    };

    /// Received power. pl_db = tx_power_dbm - pr_dbm; zero power maps to -inf dBm.
    struct PowerResult
    {
        double pr_watts = 0.0;
        double pr_dbm = 0.0;
        double pl_db = 0.0;

        static PowerResult from_watts(double watts, double tx_power_dbm);
    };

    enum class Kernel
    {
        general,
        far_field,
        far_field_max,
        near_field,
        two_ray
    };

    enum class Channel
    {
        combined,
        direct_only,
        ris_only
    };

    std::string_view to_string(Kernel k);
    std::string_view to_string(Channel c);
    /// Accepts both the dashed CLI spelling ("far-field") and the underscored one.
    Kernel kernel_from_string(std::string_view name);
    Channel channel_from_string(std::string_view name);

    /// Direct-only zeroes every reflection amplitude; RIS-only drops the direct path.
    Scenario restrict_to_channel(const Scenario &s, Channel c);

    /// Outdoor setting used throughout the reference experiments: 10.5 GHz, 10 dBm, 21 dBi antennas,
    /// a 100 x 102 panel of 1 cm cells at h = 10 m, terminals at 2 m and 3 m, theta = pi/4,
    /// psi_t = pi, psi_r = 0, d_1 = d_2 = 100 m, d = 5 (2h - h_t - h_r).
    Scenario reference_scenario();

    struct GeometricResidual
    {
        /// (d_1 + d_2) - sqrt((2h - h_t - h_r)^2 + d^2)
        double path_sum = 0.0;
        /// Horizontal transmitter/receiver separation implied by the placements, minus d.
        double ground_separation = 0.0;
    };

    GeometricResidual geometric_residual(const Scenario &s);

} // namespace rispl

#endif
