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

#ifndef RISPL_CLI_HPP
#define RISPL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rispl::cli
{
    enum ExitCode : int
    {
        ok = 0,
        failure = 1,
        usage_error = 2,
        validation_error = 3,
        tolerance_breach = 4
    };

    /// Runs one command line (without the program name). Reports go to `out`, diagnostics to `err`.
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace rispl::cli

#endif
