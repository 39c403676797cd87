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

#ifndef RISPL_PANEL_HPP
#define RISPL_PANEL_HPP

#include "rispl/radiation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rispl
{
    /// N x M reflecting panel lying in the plane z = h, centred on the z axis.
    ///
    /// Element indices follow the summation limits of the model: the row index n runs over
    /// 1 - N/2 ... N/2 (y direction, pitch d_y) and the column index m over 1 - M/2 ... M/2
    /// (x direction, pitch d_x). Both counts must therefore be even.
    class RisPanel
    {
    public:
        RisPanel() = default;

        /// Panel whose cells all share `coefficient`.
        RisPanel(int rows, int cols, double dx_m, double dy_m, double height_m,
                 ReflectionCoefficient coefficient = {});

        /// Panel with one coefficient per cell, row-major over (n, m) from the lowest index.
        RisPanel(int rows, int cols, double dx_m, double dy_m, double height_m,
                 std::vector<ReflectionCoefficient> per_element);

        int rows() const noexcept { return rows_; }
        int cols() const noexcept { return cols_; }
        double dx() const noexcept { return dx_; }
        double dy() const noexcept { return dy_; }
        double height() const noexcept { return height_; }
        std::size_t element_count() const noexcept { return static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_); }

        int min_row() const noexcept { return 1 - rows_ / 2; }
        int max_row() const noexcept { return rows_ / 2; }
        int min_col() const noexcept { return 1 - cols_ / 2; }
        int max_col() const noexcept { return cols_ / 2; }

        /// Throws IndexError outside the index ranges above.
        const ReflectionCoefficient &coefficient(int n, int m) const;

        /// Set when all cells share one coefficient (always the case for uniform panels).
        std::optional<ReflectionCoefficient> uniform_coefficient() const;

        bool has_per_element() const noexcept { return !per_element_.empty(); }

        void set_uniform(ReflectionCoefficient c);
        void set_height(double height_m) { height_ = height_m; }
        void set_pitch(double dx_m, double dy_m)
        {
            dx_ = dx_m;
            dy_ = dy_m;
        }

        /// Resizes the grid. Per-element coefficients are collapsed to the uniform coefficient.
        void resize(int rows, int cols);

        /// Largest linear extent of the aperture, sqrt((M d_x)^2 + (N d_y)^2).
        double aperture_diagonal() const;

        /// Empty when the panel is valid.
        std::vector<std::string> violations() const;

    private:
        std::size_t flat_index(int n, int m) const;

        int rows_ = 2;
        int cols_ = 2;
        double dx_ = 0.01;
        double dy_ = 0.01;
        double height_ = 0.0;
        ReflectionCoefficient uniform_{};
        std::vector<ReflectionCoefficient> per_element_;
    };

} // namespace rispl

#endif
