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

#include "rispl/array_factor.hpp"
#include "rispl/units.hpp"

#include <cmath>

namespace rispl
{
    double sinc(double x)
    {
        if (x == 0.0)
            return 1.0;
        const double px = pi * x;
        if (std::abs(px) < 1e-4)
            return 1.0 - px * px / 6.0;
        return std::sin(px) / px;
    }

    double dirichlet_ratio(double u, int count)
    {
        if (count == 1)
            return 1.0;
        const double k = std::round(u);
        const double e = u - k;

        // sin(pi M (k + e)) = (-1)^(M k) sin(pi M e) and sin(pi (k + e)) = (-1)^k sin(pi e)
        const bool odd = (static_cast<long long>(std::fmod(std::abs(k), 2.0)) * (count - 1)) % 2 != 0;
        const double sign = odd ? -1.0 : 1.0;

        double ratio;
        if (std::abs(e) < 1e-8)
            ratio = 1.0 - pi * pi * e * e * (static_cast<double>(count) * count - 1.0) / 6.0;
        else
            ratio = std::sin(pi * count * e) / (count * std::sin(pi * e));
        return sign * ratio;
    }

    std::complex<double> array_factor(const RisPanel &panel, const AngularPlacement &tx, const AngularPlacement &rx,
                                      double wavelength, const LinkGeometry &g)
    {
        const double st = std::sin(tx.theta());
        const double sr = std::sin(rx.theta());
        const double ux = (st * std::cos(tx.psi()) + sr * std::cos(rx.psi())) * panel.dx() / wavelength;
        const double uy = (st * std::sin(tx.psi()) + sr * std::sin(rx.psi())) * panel.dy() / wavelength;

        const double elevation_path = (panel.height() - g.tx_height) * std::cos(tx.theta()) +
                                      (panel.height() - g.rx_height) * std::cos(rx.theta());
        const double magnitude = static_cast<double>(panel.element_count()) * dirichlet_ratio(ux, panel.cols()) *
                                 dirichlet_ratio(uy, panel.rows());
        return std::polar(1.0, -2.0 * pi * elevation_path / wavelength) * magnitude;
    }

} // namespace rispl
