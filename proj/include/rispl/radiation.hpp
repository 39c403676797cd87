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

#ifndef RISPL_RADIATION_HPP
#define RISPL_RADIATION_HPP

#include "rispl/point.hpp"

#include <complex>
#include <string>

namespace rispl
{
    /// Reflection coefficient A e^{j phi} of one unit cell. The phase is kept in [0, 2 pi).
    class ReflectionCoefficient
    {
    public:
        ReflectionCoefficient() = default;

        /// Throws DomainError unless 0 <= amplitude <= 1 and phase is finite.
        ReflectionCoefficient(double amplitude, double phase_rad);

        double amplitude() const noexcept { return amplitude_; }
        double phase() const noexcept { return phase_; }

        friend bool operator==(const ReflectionCoefficient &, const ReflectionCoefficient &) = default;

    private:
        double amplitude_ = 1.0;
        double phase_ = 0.0;
    };

    std::complex<double> reflection_value(const ReflectionCoefficient &c);

    /// Normalized power pattern. Both families are symmetric about their boresight.
    class PatternModel
    {
    public:
        enum class Kind
        {
            unity,
            cosine_power
        };

        static PatternModel unity() { return PatternModel(Kind::unity, 0.0); }

        /// cos^q(theta) in the front hemisphere, zero behind it. Throws DomainError for q < 0.
        static PatternModel cosine_power(double q);

        Kind kind() const noexcept { return kind_; }
        double exponent() const noexcept { return exponent_; }
        bool is_unity() const noexcept { return kind_ == Kind::unity; }

        std::string describe() const;

        friend bool operator==(const PatternModel &, const PatternModel &) = default;

    private:
        PatternModel(Kind kind, double q) : kind_(kind), exponent_(q) {}

        Kind kind_ = Kind::unity;
        double exponent_ = 0.0;
    };

    /// Linear power gains. All strictly positive.
    struct GainSet
    {
        double tx = 1.0;   // G_t
        double rx = 1.0;   // G_r
        double cell = 1.0; // G, gain (attenuation) of one unit cell

        static GainSet from_db(double tx_db, double rx_db, double cell_db);
        bool valid() const { return tx > 0.0 && rx > 0.0 && cell > 0.0; }
    };

    /// Elevation (from boresight) and azimuth of a direction, radians.
    struct Direction
    {
        double theta = 0.0;
        double psi = 0.0;
    };

    /// The four directions that enter the combined pattern of one reflected path.
    struct ElementAngles
    {
        Direction tx_to_element; // seen by the transmit antenna
        Direction element_to_tx; // seen by the unit cell, towards the transmitter
        Direction element_to_rx; // seen by the unit cell, towards the receiver
        Direction rx_to_element; // seen by the receive antenna
    };

    double pattern_value(const PatternModel &model, double theta, double psi);

    double combined_pattern(const PatternModel &tx, const PatternModel &cell, const PatternModel &rx,
                            const ElementAngles &angles);

    /// Direction of `to` seen from `from`: theta from the +z axis in [0, pi], psi = atan2(dy, dx) in [0, 2 pi).
    /// Throws DomainError for coincident points.
    Direction angles_from_points(const Point3 &from, const Point3 &to);

    /// Same as angles_from_points, but theta is measured from `boresight` instead of +z.
    Direction angles_in_frame(const Point3 &from, const Point3 &to, const Point3 &boresight);

    /// Wraps an angle into [0, 2 pi).
    double wrap_two_pi(double angle);

} // namespace rispl

#endif
