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

#include "rispl/radiation.hpp"
#include "rispl/error.hpp"
#include "rispl/units.hpp"

#include <cmath>
#include <sstream>

namespace rispl
{
    double wrap_two_pi(double angle)
    {
        double w = std::fmod(angle, 2.0 * pi);
        if (w < 0.0)
            w += 2.0 * pi;
        // fmod of a tiny negative number can round up to exactly 2 pi
        if (w >= 2.0 * pi)
            w = 0.0;
        return w;
    }

    ReflectionCoefficient::ReflectionCoefficient(double amplitude, double phase_rad)
    {
        if (!(amplitude >= 0.0 && amplitude <= 1.0))
            throw DomainError("reflection amplitude must lie in [0, 1]");
        if (!std::isfinite(phase_rad))
            throw DomainError("reflection phase must be finite");
        amplitude_ = amplitude;
        phase_ = wrap_two_pi(phase_rad);
    }

    std::complex<double> reflection_value(const ReflectionCoefficient &c)
    {
        return std::polar(c.amplitude(), c.phase());
    }

    PatternModel PatternModel::cosine_power(double q)
    {
        if (!(q >= 0.0) || !std::isfinite(q))
            throw DomainError("cosine pattern exponent must be a finite value >= 0");
        return PatternModel(Kind::cosine_power, q);
    }

    std::string PatternModel::describe() const
    {
        if (kind_ == Kind::unity)
            return "unity";
        std::ostringstream os;
        os << "cos^" << exponent_;
        return os.str();
    }

    GainSet GainSet::from_db(double tx_db, double rx_db, double cell_db)
    {
        return {db_to_linear(tx_db), db_to_linear(rx_db), db_to_linear(cell_db)};
    }

    double pattern_value(const PatternModel &model, double theta, double /*psi*/)
    {
        if (model.is_unity())
            return 1.0;
        if (!(theta >= 0.0 && theta < pi / 2.0))
            return 0.0;
        const double c = std::cos(theta);
        const double v = std::pow(c, model.exponent());
        return v > 1.0 ? 1.0 : v;
    }

    double combined_pattern(const PatternModel &tx, const PatternModel &cell, const PatternModel &rx,
                            const ElementAngles &a)
    {
        return pattern_value(tx, a.tx_to_element.theta, a.tx_to_element.psi) *
               pattern_value(cell, a.element_to_tx.theta, a.element_to_tx.psi) *
               pattern_value(cell, a.element_to_rx.theta, a.element_to_rx.psi) *
               pattern_value(rx, a.rx_to_element.theta, a.rx_to_element.psi);
    }

    Direction angles_from_points(const Point3 &from, const Point3 &to)
    {
        return angles_in_frame(from, to, {0.0, 0.0, 1.0});
    }

    Direction angles_in_frame(const Point3 &from, const Point3 &to, const Point3 &boresight)
    {
        const Point3 v = to - from;
        const double len = norm(v);
        if (!(len > 0.0))
            throw DomainError("direction between coincident points is undefined");
        const double blen = norm(boresight);
        if (!(blen > 0.0))
            throw DomainError("boresight must be a nonzero vector");

        const Point3 w = (1.0 / blen) * boresight;
        // Reference azimuth axis: project +x (or +y when the boresight is along x) onto the plane normal to w.
        const Point3 ref = std::abs(w.x) < 0.9 ? Point3{1.0, 0.0, 0.0} : Point3{0.0, 1.0, 0.0};
        Point3 u = ref - dot(ref, w) * w;
        u = (1.0 / norm(u)) * u;
        const Point3 vv = cross(w, u);

        const double along = dot(v, w);
        const double cu = dot(v, u);
        const double cv = dot(v, vv);
        Direction d;
        d.theta = std::atan2(std::hypot(cu, cv), along);
        d.psi = (cu == 0.0 && cv == 0.0) ? 0.0 : wrap_two_pi(std::atan2(cv, cu));
        return d;
    }

} // namespace rispl
