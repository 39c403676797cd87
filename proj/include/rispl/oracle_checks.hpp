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

#ifndef RISPL_ORACLE_CHECKS_HPP
#define RISPL_ORACLE_CHECKS_HPP

#include "rispl/scenario.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rispl
{
    /// Outcome of one family of randomized consistency checks.
    struct CheckResult
    {
        std::string name;
        std::size_t configs = 0;
        double max_error = 0.0;
        double tolerance = 0.0;
        std::string unit; // "rel" or "dB"
        bool passed = true;
        /// Configuration that produced the largest error when the check failed.
        std::optional<Scenario> failing;
        std::size_t failing_index = 0;
    };

    struct ValidationReport
    {
        int panel_size = 0;
        std::uint64_t seed = 0;
        std::vector<CheckResult> checks;

        bool passed() const;
    };

    /// Tolerances of the built-in checks.
    namespace tolerance
    {
        inline constexpr double array_factor_rel = 1e-9;
        inline constexpr double far_field_db = 0.5;
        inline constexpr double near_field_db = 0.1;
        inline constexpr double friis_rel = 1e-12;
        inline constexpr double scaling_db = 0.01;
    } // namespace tolerance

    /// Runs the oracle-equivalence checks on seeded random configurations for a K x K panel
    /// (K even, 2 <= K <= 16):
    ///  - array_factor_identity: closed form vs the phase sum over path_sum_deviation()
    ///  - far_field_vs_general: far-field closed form vs the exact element sum, specular angles, no direct path
    ///  - near_field_exact_vs_simplified: both near-field channels when the path phase is below 0.05 rad
    ///  - friis_reduction: every kernel with the reflected contribution removed
    ///  - distance_doubling, area_doubling: 6.02 dB and 12.04 dB laws of the far-field form
    ValidationReport run_validation(int panel_size, std::uint64_t seed, std::size_t configs_per_check = 100);

    /// Brute-force phase sum over all elements using path_sum_deviation().
    std::complex<double> array_factor_sum(const Scenario &s);

} // namespace rispl

#endif
