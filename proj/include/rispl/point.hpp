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

#ifndef RISPL_POINT_HPP
#define RISPL_POINT_HPP

#include <cmath>

namespace rispl
{
    /// Cartesian position in meters. The RIS centre sits on the z axis and the panel occupies the plane z = h.
    struct Point3
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;

        friend constexpr Point3 operator-(const Point3 &a, const Point3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
        friend constexpr Point3 operator+(const Point3 &a, const Point3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
        friend constexpr Point3 operator*(double s, const Point3 &a) { return {s * a.x, s * a.y, s * a.z}; }
        friend constexpr bool operator==(const Point3 &, const Point3 &) = default;

        bool is_finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
    };

    inline constexpr double dot(const Point3 &a, const Point3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

    inline constexpr Point3 cross(const Point3 &a, const Point3 &b)
    {
        return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    }

    inline double norm(const Point3 &a) { return std::sqrt(dot(a, a)); }

} // namespace rispl

#endif
