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

#include "rispl/geometry.hpp"
#include "rispl/error.hpp"
#include "rispl/radiation.hpp"
#include "rispl/units.hpp"

#include <cmath>

namespace rispl
{
    std::vector<std::string> LinkGeometry::violations() const
    {
        std::vector<std::string> issues;
        if (!(tx_height >= 0.0) || !std::isfinite(tx_height))
            issues.emplace_back("transmitter height h_t must be >= 0");
        if (!(rx_height >= 0.0) || !std::isfinite(rx_height))
            issues.emplace_back("receiver height h_r must be >= 0");
        if (!(distance >= 0.0) || !std::isfinite(distance))
            issues.emplace_back("ground distance d must be >= 0");
        if (tx_height == rx_height && distance == 0.0)
            issues.emplace_back("transmitter and receiver are colocated (h_t = h_r and d = 0)");
        return issues;
    }

    AngularPlacement::AngularPlacement(double range_m, double theta_rad, double psi_rad)
    {
        if (!(range_m > 0.0) || !std::isfinite(range_m))
            throw DomainError("placement range must be positive");
        if (!(theta_rad >= 0.0 && theta_rad < pi / 2.0))
            throw DomainError("placement elevation theta must lie in [0, pi/2)");
        if (!std::isfinite(psi_rad))
            throw DomainError("placement azimuth psi must be finite");
        range_ = range_m;
        theta_ = theta_rad;
        psi_ = wrap_two_pi(psi_rad);
    }

    double direct_link_distance(const LinkGeometry &g)
    {
        if (auto issues = g.violations(); !issues.empty())
            throw InvalidGeometry(issues.front());
        return std::hypot(g.tx_height - g.rx_height, g.distance);
    }

    double elevation_product(const LinkGeometry &g, double h)
    {
        return (h - g.tx_height) * (h - g.rx_height);
    }

    double phase_difference(const LinkGeometry &g, double h, double wavelength)
    {
        if (!(g.distance > 0.0))
            throw DomainError("phase difference needs a positive ground distance d");
        if (!(wavelength > 0.0))
            throw DomainError("wavelength must be positive");
        return 4.0 * pi * elevation_product(g, h) / (wavelength * g.distance);
    }

    double reflected_path_length(const LinkGeometry &g, double h)
    {
        return std::hypot(2.0 * h - g.tx_height - g.rx_height, g.distance);
    }

    Point3 element_center(const RisPanel &panel, int n, int m)
    {
        if (n < panel.min_row() || n > panel.max_row() || m < panel.min_col() || m > panel.max_col())
            throw IndexError("element (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ") outside the " +
                             std::to_string(panel.rows()) + " x " + std::to_string(panel.cols()) + " panel");
        return {(m - 0.5) * panel.dx(), (n - 0.5) * panel.dy(), panel.height()};
    }

    namespace
    {
        Point3 spherical(const AngularPlacement &p, double height)
        {
            const double s = std::sin(p.theta());
            return {p.range() * s * std::cos(p.psi()), p.range() * s * std::sin(p.psi()),
                    p.range() * std::cos(p.theta()) + height};
        }

        double linearized(const AngularPlacement &p, double terminal_height, double ris_height, double x, double y)
        {
            const double s = std::sin(p.theta());
            return p.range() - s * std::cos(p.psi()) * x - s * std::sin(p.psi()) * y +
                   (ris_height - terminal_height) * std::cos(p.theta());
        }
    } // namespace

    Point3 tx_position(const AngularPlacement &p, double tx_height) { return spherical(p, tx_height); }

    Point3 rx_position(const AngularPlacement &p, double rx_height) { return spherical(p, rx_height); }

    double exact_element_distance(const Point3 &antenna, const Point3 &element) { return norm(antenna - element); }

    ElementDistances linearized_element_distances(const AngularPlacement &tx, const AngularPlacement &rx,
                                                  const LinkGeometry &g, const RisPanel &panel, int n, int m)
    {
        const Point3 e = element_center(panel, n, m);
        return {linearized(tx, g.tx_height, panel.height(), e.x, e.y),
                linearized(rx, g.rx_height, panel.height(), e.x, e.y)};
    }

    double path_sum_deviation(const AngularPlacement &tx, const AngularPlacement &rx, const LinkGeometry &g,
                              const RisPanel &panel, int n, int m)
    {
        // Closed form of d_1 + d_2 - (r^t + r^r); the range terms cancel exactly.
        const Point3 e = element_center(panel, n, m);
        const double st = std::sin(tx.theta());
        const double sr = std::sin(rx.theta());
        return (st * std::cos(tx.psi()) + sr * std::cos(rx.psi())) * e.x +
               (st * std::sin(tx.psi()) + sr * std::sin(rx.psi())) * e.y -
               (panel.height() - g.tx_height) * std::cos(tx.theta()) -
               (panel.height() - g.rx_height) * std::cos(rx.theta());
    }

} // namespace rispl
