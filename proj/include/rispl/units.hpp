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

#ifndef RISPL_UNITS_HPP
#define RISPL_UNITS_HPP

#include <numbers>

namespace rispl
{
    inline constexpr double speed_of_light = 299'792'458.0; // m/s
    inline constexpr double pi = std::numbers::pi;

    double wavelength_from_frequency(double frequency_hz);

    double db_to_linear(double value_db);
    double linear_to_db(double value);

    /// Throws DomainError for nonpositive power.
    double watts_to_dbm(double power_w);
    double dbm_to_watts(double power_dbm);

    inline double path_loss_db(double tx_power_dbm, double rx_power_dbm) { return tx_power_dbm - rx_power_dbm; }

    inline constexpr double deg_to_rad(double deg) { return deg * pi / 180.0; }
    inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / pi; }

} // namespace rispl

#endif
