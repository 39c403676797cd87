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

#ifndef RISPL_SCENARIO_IO_HPP
#define RISPL_SCENARIO_IO_HPP

#include "rispl/scenario.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace rispl
{
    /// Parses a scenario document. Angles are in degrees, gains in dB, frequency in GHz.
    /// Missing keys take the reference_scenario() values; unknown keys are rejected.
    /// Throws ValidationError with one entry per problem found.
    Scenario parse_scenario(std::string_view json_text);
    Scenario load_scenario(const std::filesystem::path &path);

    /// Inverse of parse_scenario(); `parse_scenario(scenario_to_json(s))` reproduces s.
    std::string scenario_to_json(const Scenario &s, int indent = 2);

} // namespace rispl

#endif
