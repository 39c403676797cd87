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

#ifndef RISPL_GEOMETRY_HPP
#define RISPL_GEOMETRY_HPP

#include "rispl/panel.hpp"
#include "rispl/point.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rispl
{
    /// Heights of the two terminals above ground and their ground-projected separation (meters).
    struct LinkGeometry
    {
        double tx_height = 0.0; // h_t
        double rx_height = 0.0; // h_r
        double distance = 0.0;  // d

        /// Empty when valid: nonnegative, finite, and not colocated.
        std::vector<std::string> violations() const;
    };

    /// Range and angles of a terminal as seen from the RIS centre. theta is measured from the panel
    /// boresight (+z), psi is the azimuth in the panel plane.
    class AngularPlacement
    {
    public:
        AngularPlacement() = default;

        /// Throws DomainError unless range > 0 and theta in [0, pi/2). psi is wrapped into [0, 2 pi).
        AngularPlacement(double range_m, double theta_rad, double psi_rad);

        double range() const noexcept { return range_; }
        double theta() const noexcept { return theta_; }
        double psi() const noexcept { return psi_; }

    private:
        double range_ = 1.0;
        double theta_ = 0.0;
        double psi_ = 0.0;
    };

    /// sqrt((h_t - h_r)^2 + d^2). Throws InvalidGeometry for a colocated link.
    double direct_link_distance(const LinkGeometry &g);

    /// X = h^2 + h_t h_r - h h_t - h h_r, i.e. (h - h_t)(h - h_r).
    double elevation_product(const LinkGeometry &g, double ris_height);

    /// Asymptotic phase difference between the direct and reflected rays, 4 pi X / (lambda d).
    /// Only meaningful for d >> 2h - h_t - h_r; the value is not wrapped. Throws DomainError for d = 0.
    double phase_difference(const LinkGeometry &g, double ris_height, double wavelength);

    /// Length of the specular reflection path, sqrt((2h - h_t - h_r)^2 + d^2).
    double reflected_path_length(const LinkGeometry &g, double ris_height);

    /// ((m - 1/2) d_x, (n - 1/2) d_y, h). Throws IndexError outside the grid.
    Point3 element_center(const RisPanel &panel, int n, int m);

    /// (d_1 sin th cos ps, d_1 sin th sin ps, d_1 cos th + h_t)
    Point3 tx_position(const AngularPlacement &p, double tx_height);

    /// Receiver counterpart of tx_position, same convention with (d_2, theta_r, psi_r, h_r).
    Point3 rx_position(const AngularPlacement &p, double rx_height);

    double exact_element_distance(const Point3 &antenna, const Point3 &element);

    struct ElementDistances
    {
        double tx = 0.0; // r^t_{n,m}
        double rx = 0.0; // r^r_{n,m}
    };

    /// First-order (far-field) expansion of the element distances:
    ///   r^t ~ d_1 - sin th_t cos ps_t (m - 1/2) d_x - sin th_t sin ps_t (n - 1/2) d_y + (h - h_t) cos th_t
    /// and likewise for the receiver.
    ElementDistances linearized_element_distances(const AngularPlacement &tx, const AngularPlacement &rx,
                                                  const LinkGeometry &g, const RisPanel &panel, int n, int m);

    /// d_1 + d_2 - (r^t + r^r) with the linearized distances.
    double path_sum_deviation(const AngularPlacement &tx, const AngularPlacement &rx, const LinkGeometry &g,
                              const RisPanel &panel, int n, int m);

} // namespace rispl

#endif
