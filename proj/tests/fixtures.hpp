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

#ifndef RISPL_TESTS_FIXTURES_HPP
#define RISPL_TESTS_FIXTURES_HPP

#include "oracles.hpp"

#include "rispl/scenario.hpp"
#include "rispl/units.hpp"

inline rispl::Scenario scenario_from(const oracle::Setup &o)
{
    rispl::Scenario s;
    s.geometry = {o.ht, o.hr, o.d};
    s.panel = rispl::RisPanel(o.rows, o.cols, o.dx, o.dy, o.h, rispl::ReflectionCoefficient(o.amp, o.phase));
    s.tx_placement = rispl::AngularPlacement(o.d1, o.theta_t, o.psi_t);
    s.rx_placement = rispl::AngularPlacement(o.d2, o.theta_r, o.psi_r);
    s.gains = {o.gt, o.gr, o.g};
    s.frequency_hz = o.freq;
    s.tx_power_dbm = o.pt_dbm;
    s.include_direct = o.direct;
    return s;
}

/// Specular far-field setup with the terminal and panel heights used throughout the examples.
inline oracle::Setup specular_setup(double d1, double d2, int k)
{
    oracle::Setup o;
    o.rows = k;
    o.cols = k;
    o.d1 = d1;
    o.d2 = d2;
    o.direct = false;
    return o;
}

inline double db_gap(double a_w, double b_w) { return std::abs(10.0 * std::log10(a_w / b_w)); }

#endif
