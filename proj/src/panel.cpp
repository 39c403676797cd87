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

#include "rispl/panel.hpp"
#include "rispl/error.hpp"

#include <cmath>
#include <string>

namespace rispl
{
    namespace
    {
        void check_count(std::vector<std::string> &issues, int count, const char *what)
        {
            if (count < 2 || count % 2 != 0)
                issues.push_back(std::string(what) + " must be an even integer >= 2 (got " + std::to_string(count) +
                                 "); element indices run over 1 - K/2 ... K/2");
        }
    } // namespace

    RisPanel::RisPanel(int rows, int cols, double dx_m, double dy_m, double height_m, ReflectionCoefficient coefficient)
        : rows_(rows), cols_(cols), dx_(dx_m), dy_(dy_m), height_(height_m), uniform_(coefficient)
    {
        if (auto issues = violations(); !issues.empty())
            throw ValidationError(std::move(issues));
    }

    RisPanel::RisPanel(int rows, int cols, double dx_m, double dy_m, double height_m,
                       std::vector<ReflectionCoefficient> per_element)
        : rows_(rows), cols_(cols), dx_(dx_m), dy_(dy_m), height_(height_m), per_element_(std::move(per_element))
    {
        if (auto issues = violations(); !issues.empty())
            throw ValidationError(std::move(issues));
        if (auto u = uniform_coefficient())
            uniform_ = *u;
    }

    std::size_t RisPanel::flat_index(int n, int m) const
    {
        if (n < min_row() || n > max_row() || m < min_col() || m > max_col())
            throw IndexError("element (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                             ") outside the panel; n in [" + std::to_string(min_row()) + ", " +
                             std::to_string(max_row()) + "], m in [" + std::to_string(min_col()) + ", " +
                             std::to_string(max_col()) + "]");
        return static_cast<std::size_t>(n - min_row()) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(m - min_col());
    }

    const ReflectionCoefficient &RisPanel::coefficient(int n, int m) const
    {
        const std::size_t i = flat_index(n, m);
        return per_element_.empty() ? uniform_ : per_element_[i];
    }

    std::optional<ReflectionCoefficient> RisPanel::uniform_coefficient() const
    {
        if (per_element_.empty())
            return uniform_;
        for (const auto &c : per_element_)
            if (!(c == per_element_.front()))
                return std::nullopt;
        return per_element_.front();
    }

    void RisPanel::set_uniform(ReflectionCoefficient c)
    {
        uniform_ = c;
        per_element_.clear();
    }

    void RisPanel::resize(int rows, int cols)
    {
        RisPanel resized(rows, cols, dx_, dy_, height_, uniform_coefficient().value_or(uniform_));
        *this = std::move(resized);
    }

    double RisPanel::aperture_diagonal() const
    {
        return std::hypot(cols_ * dx_, rows_ * dy_);
    }

    std::vector<std::string> RisPanel::violations() const
    {
        std::vector<std::string> issues;
        check_count(issues, rows_, "panel rows (N)");
        check_count(issues, cols_, "panel cols (M)");
        if (!(dx_ > 0.0) || !std::isfinite(dx_))
            issues.emplace_back("cell width d_x must be positive");
        if (!(dy_ > 0.0) || !std::isfinite(dy_))
            issues.emplace_back("cell height d_y must be positive");
        if (!(height_ >= 0.0) || !std::isfinite(height_))
            issues.emplace_back("panel elevation h must be >= 0");
        if (!per_element_.empty() && rows_ > 0 && cols_ > 0 &&
            per_element_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_))
            issues.push_back("per-element coefficient grid has " + std::to_string(per_element_.size()) +
                             " entries, expected N x M = " + std::to_string(rows_ * cols_));
        return issues;
    }

} // namespace rispl
