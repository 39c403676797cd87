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

#include "rispl/pathloss.hpp"
#include "rispl/array_factor.hpp"
#include "rispl/error.hpp"
#include "rispl/units.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace rispl
{
    namespace
    {
        double free_space_factor(double wavelength)
        {
            const double f = wavelength / (4.0 * pi);
            return f * f;
        }

        ReflectionCoefficient uniform_or_throw(const RisPanel &panel, const char *kernel)
        {
            auto c = panel.uniform_coefficient();
            if (!c)
                throw DomainError(std::string(kernel) + " closed form needs a uniform reflection coefficient");
            return *c;
        }

        void require_ground_distance(const LinkGeometry &g, const char *kernel)
        {
            if (!(g.distance > 0.0))
                throw DomainError(std::string(kernel) + " closed form needs a positive ground distance d");
        }

        // Sum of the reflected-path phasors over the rows [row_begin, row_end), one partial per row.
        void sum_rows(const Scenario &s, const Point3 &tx, const Point3 &rx, double dl, double wavelength,
                      int row_begin, int row_end, std::vector<std::complex<double>> &partials)
        {
            const RisPanel &panel = s.panel;
            const bool unity = s.patterns.all_unity();
            const Point3 centre{0.0, 0.0, panel.height()};
            const double k = 2.0 * pi / wavelength;

            for (int n = row_begin; n < row_end; ++n)
            {
                std::complex<double> acc{0.0, 0.0};
                for (int m = panel.min_col(); m <= panel.max_col(); ++m)
                {
                    const ReflectionCoefficient &c = panel.coefficient(n, m);
                    if (c.amplitude() == 0.0)
                        continue;
                    const Point3 e = element_center(panel, n, m);
                    const double rt = exact_element_distance(tx, e);
                    const double rr = exact_element_distance(rx, e);
                    if (!(rt > 0.0) || !(rr > 0.0))
                        throw DomainError("a terminal coincides with a panel element");

                    double amplitude = c.amplitude() / (rt * rr);
                    if (!unity)
                    {
                        ElementAngles a;
                        a.tx_to_element = angles_in_frame(tx, e, centre - tx);
                        a.element_to_tx = angles_from_points(e, tx);
                        a.element_to_rx = angles_from_points(e, rx);
                        a.rx_to_element = angles_in_frame(rx, e, centre - rx);
                        amplitude *= std::sqrt(combined_pattern(s.patterns.tx, s.patterns.cell, s.patterns.rx, a));
                    }
                    acc += std::polar(amplitude, c.phase() - k * (rt + rr - dl));
                }
                partials[static_cast<std::size_t>(n - panel.min_row())] = acc;
            }
        }
    } // namespace

    double coherent_sum_power(double direct_amplitude, double ris_amplitude, double phi, double path_phase)
    {
        return std::norm(std::complex<double>(direct_amplitude, 0.0) + std::polar(ris_amplitude, phi - path_phase));
    }

    PowerResult friis_direct(const Scenario &s)
    {
        s.validate();
        const double dl = direct_link_distance(s.geometry);
        const double watts = s.tx_power_w() * free_space_factor(s.wavelength()) * s.gains.tx * s.gains.rx *
                             s.direct_pattern / (dl * dl);
        return PowerResult::from_watts(watts, s.tx_power_dbm);
    }

    PowerResult received_power_general(const Scenario &s, const GeneralOptions &opt)
    {
        s.validate();
        const double wavelength = s.wavelength();
        const double dl = direct_link_distance(s.geometry);
        const Point3 tx = tx_position(s.tx_placement, s.geometry.tx_height);
        const Point3 rx = rx_position(s.rx_placement, s.geometry.rx_height);

        const RisPanel &panel = s.panel;
        std::vector<std::complex<double>> partials(static_cast<std::size_t>(panel.rows()));
        const unsigned workers = std::clamp(opt.threads, 1u, static_cast<unsigned>(panel.rows()));
        if (workers == 1)
        {
            sum_rows(s, tx, rx, dl, wavelength, panel.min_row(), panel.max_row() + 1, partials);
        }
        else
        {
            std::vector<std::exception_ptr> errors(workers);
            {
                std::vector<std::jthread> pool;
                const int rows = panel.rows();
                for (unsigned w = 0; w < workers; ++w)
                {
                    const int begin = panel.min_row() + static_cast<int>(rows * w / workers);
                    const int end = panel.min_row() + static_cast<int>(rows * (w + 1) / workers);
                    pool.emplace_back([&, begin, end, w] {
                        try
                        {
                            sum_rows(s, tx, rx, dl, wavelength, begin, end, partials);
                        }
                        catch (...)
                        {
                            errors[w] = std::current_exception();
                        }
                    });
                }
            }
            for (auto &e : errors)
                if (e)
                    std::rethrow_exception(e);
        }

        // Rows are reduced in index order so the result does not depend on the worker count.
        std::complex<double> sum{0.0, 0.0};
        for (const auto &p : partials)
            sum += p;

        const double prefactor =
            std::sqrt(s.gains.rx * s.gains.tx * s.gains.cell * panel.dx() * panel.dy()) / (2.0 * std::sqrt(pi));
        const std::complex<double> ris = prefactor * sum;
        const double direct = s.include_direct ? std::sqrt(s.gains.tx * s.gains.rx * s.direct_pattern) / dl : 0.0;

        const double watts = s.tx_power_w() * free_space_factor(wavelength) * std::norm(direct + ris);
        return PowerResult::from_watts(watts, s.tx_power_dbm);
    }

    PowerResult received_power_two_ray(const LinkGeometry &g, double ris_height, const TwoRayGains &gains,
                                       std::complex<double> gamma, double wavelength, double tx_power_dbm)
    {
        const double dl = direct_link_distance(g);
        const double dphi = phase_difference(g, ris_height, wavelength);
        const double reflected = reflected_path_length(g, ris_height);
        if (!(gains.los_tx >= 0.0 && gains.los_rx >= 0.0 && gains.reflected_tx >= 0.0 && gains.reflected_rx >= 0.0))
            throw DomainError("two-ray gains must be nonnegative");

        const std::complex<double> field = std::sqrt(gains.los_tx * gains.los_rx) / dl +
                                           gamma * std::sqrt(gains.reflected_tx * gains.reflected_rx) *
                                               std::polar(1.0, -dphi) / reflected;
        const double watts = dbm_to_watts(tx_power_dbm) * free_space_factor(wavelength) * std::norm(field);
        return PowerResult::from_watts(watts, tx_power_dbm);
    }

    PowerResult received_power_far_field(const Scenario &s)
    {
        s.validate();
        require_ground_distance(s.geometry, "far-field");
        const ReflectionCoefficient c = uniform_or_throw(s.panel, "far-field");
        const double wavelength = s.wavelength();
        const double dl = direct_link_distance(s.geometry);
        const double x = phase_difference(s.geometry, s.panel.height(), wavelength);

        std::complex<double> direct{0.0, 0.0};
        if (s.include_direct)
            direct = std::sqrt(s.gains.tx * s.gains.rx * s.direct_pattern) / dl * std::complex<double>(1.0, x);

        const AngularPlacement &pt = s.tx_placement;
        const AngularPlacement &pr = s.rx_placement;
        const double ft = pattern_value(s.patterns.cell, pt.theta(), pt.psi());
        const double fr = pattern_value(s.patterns.cell, pr.theta(), pr.psi());
        const double k = std::sqrt(s.gains.rx * s.gains.tx * s.gains.cell * ft * fr * s.panel.dx() * s.panel.dy()) /
                         (2.0 * std::sqrt(pi) * pt.range() * pr.range());
        const std::complex<double> ris =
            reflection_value(c) * k * array_factor(s.panel, pt, pr, wavelength, s.geometry);

        const double watts = s.tx_power_w() * free_space_factor(wavelength) * std::norm(direct + ris);
        return PowerResult::from_watts(watts, s.tx_power_dbm);
    }

    PowerResult received_power_far_field_max(const Scenario &s)
    {
        s.validate();
        require_ground_distance(s.geometry, "far-field maximum");
        const ReflectionCoefficient c = uniform_or_throw(s.panel, "far-field maximum");
        const double wavelength = s.wavelength();
        const double dl = direct_link_distance(s.geometry);
        const double d = s.geometry.distance;
        const double x = elevation_product(s.geometry, s.panel.height());

        const AngularPlacement &pt = s.tx_placement;
        const AngularPlacement &pr = s.rx_placement;
        const double ft = pattern_value(s.patterns.cell, pt.theta(), pt.psi());
        const double fr = pattern_value(s.patterns.cell, pr.theta(), pr.psi());
        const double k = std::sqrt(s.gains.rx * s.gains.tx * s.gains.cell * ft * fr * s.panel.dx() * s.panel.dy()) /
                         (2.0 * std::sqrt(pi) * pt.range() * pr.range());
        const std::complex<double> ris = static_cast<double>(s.panel.element_count()) * reflection_value(c) * k;

        const double gtgr = s.gains.tx * s.gains.rx * s.direct_pattern;
        const double direct = s.include_direct ? std::sqrt(gtgr) / dl : 0.0;
        double watts = s.tx_power_w() * free_space_factor(wavelength) * std::norm(direct + ris);
        if (s.include_direct)
            watts += s.tx_power_w() * gtgr * x * x / (dl * dl * d * d);
        return PowerResult::from_watts(watts, s.tx_power_dbm);
    }

    SingleElementResult received_power_single_element(const Scenario &s, std::complex<double> gamma)
    {
        s.validate();
        require_ground_distance(s.geometry, "single-element");
        const double wavelength = s.wavelength();
        const double dl = direct_link_distance(s.geometry);
        const double h = s.panel.height();
        const double dphi = phase_difference(s.geometry, h, wavelength);
        const double reflected = reflected_path_length(s.geometry, h);
        const double g = std::sqrt(s.gains.tx * s.gains.rx);

        const std::complex<double> direct = s.include_direct ? std::complex<double>(g / dl, 0.0) : 0.0;
        const std::complex<double> field = direct + gamma * g * std::polar(1.0, -dphi) / reflected;

        SingleElementResult r;
        r.two_ray = PowerResult::from_watts(s.tx_power_w() * free_space_factor(wavelength) * std::norm(field),
                                            s.tx_power_dbm);
        const double d = s.geometry.distance;
        const double a = g * elevation_product(s.geometry, h) / (d * d);
        r.asymptote = PowerResult::from_watts(s.tx_power_w() * a * a, s.tx_power_dbm);
        return r;
    }

    NearFieldResult received_power_near_field(const Scenario &s)
    {
        s.validate();
        require_ground_distance(s.geometry, "near-field");
        const ReflectionCoefficient c = uniform_or_throw(s.panel, "near-field");
        const double wavelength = s.wavelength();
        const double dl = direct_link_distance(s.geometry);
        const double d = s.geometry.distance;
        const double x = elevation_product(s.geometry, s.panel.height());
        const double path = s.tx_placement.range() + s.rx_placement.range();

        const double gtgr = s.gains.tx * s.gains.rx;
        const double direct = s.include_direct ? std::sqrt(gtgr * s.direct_pattern) / dl : 0.0;
        const double ris = c.amplitude() * std::sqrt(gtgr) / path;
        const double scale = s.tx_power_w() * free_space_factor(wavelength);

        const double coherent = scale * coherent_sum_power(direct, ris, c.phase(), 0.0);
        const double elevation_term =
            s.tx_power_w() * c.amplitude() * c.amplitude() * gtgr * x * x / (path * path * d * d);
        const double path_phase = 2.0 * pi * (path - dl) / wavelength;

        NearFieldResult r;
        r.coherent = PowerResult::from_watts(coherent, s.tx_power_dbm);
        r.simplified = PowerResult::from_watts(coherent + elevation_term, s.tx_power_dbm);
        r.exact = PowerResult::from_watts(scale * coherent_sum_power(direct, ris, c.phase(), path_phase),
                                          s.tx_power_dbm);
        return r;
    }

    double near_field_boundary(const RisPanel &panel, double wavelength)
    {
        if (!(wavelength > 0.0))
            throw DomainError("wavelength must be positive");
        const double aperture = panel.aperture_diagonal();
        return 2.0 * aperture * aperture / wavelength;
    }

    PowerResult evaluate(const Scenario &s, Kernel k)
    {
        switch (k)
        {
        case Kernel::general:
            return received_power_general(s);
        case Kernel::far_field:
            return received_power_far_field(s);
        case Kernel::far_field_max:
            return received_power_far_field_max(s);
        case Kernel::near_field:
            return received_power_near_field(s).simplified;
        case Kernel::two_ray: {
            const ReflectionCoefficient c = uniform_or_throw(s.panel, "two-ray");
            return received_power_single_element(s, reflection_value(c)).two_ray;
        }
        }
        throw DomainError("unknown kernel");
    }

} // namespace rispl
