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

#include "rispl/units.hpp"
#include "rispl/error.hpp"

#include <cmath>
#include <string>

namespace rispl
{
    namespace
    {
        std::string join_issues(const std::vector<std::string> &issues)
        {
            std::string msg = "invalid input";
            for (const auto &i : issues)
                msg += "; " + i;
            return msg;
        }
    } // namespace

    ValidationError::ValidationError(std::vector<std::string> issues)
        : Error(join_issues(issues)), issues_(std::move(issues))
    {
    }

    double wavelength_from_frequency(double frequency_hz)
    {
        if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
            throw DomainError("frequency must be positive and finite");
        return speed_of_light / frequency_hz;
    }

    double db_to_linear(double value_db) { return std::pow(10.0, value_db / 10.0); }

    double linear_to_db(double value)
    {
        if (!(value > 0.0))
            throw DomainError("decibel conversion of a nonpositive ratio");
        return 10.0 * std::log10(value);
    }

    double watts_to_dbm(double power_w)
    {
        if (!(power_w > 0.0))
            throw DomainError("dBm conversion needs a positive power, got " + std::to_string(power_w) + " W");
        return 10.0 * std::log10(power_w) + 30.0;
    }

    double dbm_to_watts(double power_dbm) { return std::pow(10.0, (power_dbm - 30.0) / 10.0); }

} // namespace rispl
