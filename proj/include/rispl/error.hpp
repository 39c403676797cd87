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

#ifndef RISPL_ERROR_HPP
#define RISPL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace rispl
{
    /// Base class of every exception thrown by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Degenerate or physically impossible link geometry.
    class InvalidGeometry : public Error
    {
    public:
        using Error::Error;
    };

    /// A formula was evaluated outside its domain (zero distance, nonpositive power, ...).
    class DomainError : public Error
    {
    public:
        using Error::Error;
    };

    /// Element index outside the panel grid.
    class IndexError : public Error
    {
    public:
        using Error::Error;
    };

    /// Aggregated invariant violations. `issues()` holds one message per violated rule.
    class ValidationError : public Error
    {
    public:
        explicit ValidationError(std::vector<std::string> issues);

        const std::vector<std::string> &issues() const noexcept { return issues_; }

    private:
        std::vector<std::string> issues_;
    };

} // namespace rispl

#endif
