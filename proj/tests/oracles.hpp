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

// Straightforward reference formulas used by the tests. Nothing here calls into
// the library; inputs are plain numbers so the two implementations stay independent.

#ifndef RISPL_TESTS_ORACLES_HPP
#define RISPL_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracle
{
    inline constexpr double c0 = 299792458.0;
    inline constexpr double pi = std::numbers::pi;
    using cplx = std::complex<double>;

    inline double dbm_to_w(double dbm) { return std::pow(10.0, dbm / 10.0) / 1000.0; }
    inline double w_to_dbm(double w) { return 10.0 * std::log10(w * 1000.0); }
    inline double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }

    inline double friis_w(double pt_w, double lambda, double dl, double gt, double gr)
    {
        const double k = lambda / (4.0 * pi * dl);
        return pt_w * k * k * gt * gr;
    }

    struct Setup
    {
        double ht = 2.0, hr = 3.0, d = 75.0, h = 10.0;
        int rows = 8, cols = 8;
        double dx = 0.01, dy = 0.01;
        double amp = 1.0, phase = 0.0;
        double d1 = 100.0, theta_t = pi / 4.0, psi_t = pi;
        double d2 = 100.0, theta_r = pi / 4.0, psi_r = 0.0;
        double gt = 1.0, gr = 1.0, g = 1.0;
        double freq = 10.5e9;
        double pt_dbm = 10.0;
        bool direct = true;
    };

    /// Element-by-element field sum with exact distances and unity patterns.
    inline double general_power_w(const Setup &s)
    {
        const double lambda = c0 / s.freq;
        const double dl = std::sqrt((s.ht - s.hr) * (s.ht - s.hr) + s.d * s.d);
        const double tx[3] = {s.d1 * std::sin(s.theta_t) * std::cos(s.psi_t), s.d1 * std::sin(s.theta_t) * std::sin(s.psi_t),
                              s.d1 * std::cos(s.theta_t) + s.ht};
        const double rx[3] = {s.d2 * std::sin(s.theta_r) * std::cos(s.psi_r), s.d2 * std::sin(s.theta_r) * std::sin(s.psi_r),
                              s.d2 * std::cos(s.theta_r) + s.hr};
        cplx sum = 0.0;
        for (int n = 1 - s.rows / 2; n <= s.rows / 2; ++n)
            for (int m = 1 - s.cols / 2; m <= s.cols / 2; ++m)
            {
                const double e[3] = {(m - 0.5) * s.dx, (n - 0.5) * s.dy, s.h};
                const double rt = std::sqrt((tx[0] - e[0]) * (tx[0] - e[0]) + (tx[1] - e[1]) * (tx[1] - e[1]) +
                                            (tx[2] - e[2]) * (tx[2] - e[2]));
                const double rr = std::sqrt((rx[0] - e[0]) * (rx[0] - e[0]) + (rx[1] - e[1]) * (rx[1] - e[1]) +
                                            (rx[2] - e[2]) * (rx[2] - e[2]));
                sum += std::polar(s.amp, s.phase) / (rt * rr) * std::polar(1.0, -2.0 * pi * (rt + rr - dl) / lambda);
            }
        const cplx ris = std::sqrt(s.gr * s.gt * s.g * s.dx * s.dy) / (2.0 * std::sqrt(pi)) * sum;
        const cplx direct = s.direct ? std::sqrt(s.gt * s.gr) / dl : 0.0;
        const double k = lambda / (4.0 * pi);
        return dbm_to_w(s.pt_dbm) * k * k * std::norm(direct + ris);
    }

    /// First-order element distance from the transmitter, with the sign convention of the closed forms.
    inline double linear_rt(const Setup &s, int n, int m)
    {
        return s.d1 - std::sin(s.theta_t) * std::cos(s.psi_t) * (m - 0.5) * s.dx -
               std::sin(s.theta_t) * std::sin(s.psi_t) * (n - 0.5) * s.dy + (s.h - s.ht) * std::cos(s.theta_t);
    }

    inline double linear_rr(const Setup &s, int n, int m)
    {
        return s.d2 - std::sin(s.theta_r) * std::cos(s.psi_r) * (m - 0.5) * s.dx -
               std::sin(s.theta_r) * std::sin(s.psi_r) * (n - 0.5) * s.dy + (s.h - s.hr) * std::cos(s.theta_r);
    }

    /// Phase sum over all elements of exp(j 2 pi (d1 + d2 - alpha) / lambda) with linearized alpha.
    /// The range terms cancel analytically, so only the per-element offsets are summed.
    inline cplx array_factor_brute(const Setup &s, double lambda)
    {
        cplx sum = 0.0;
        for (int n = 1 - s.rows / 2; n <= s.rows / 2; ++n)
            for (int m = 1 - s.cols / 2; m <= s.cols / 2; ++m)
            {
                const double x = (m - 0.5) * s.dx, y = (n - 0.5) * s.dy;
                const double offset_t = std::sin(s.theta_t) * (std::cos(s.psi_t) * x + std::sin(s.psi_t) * y) -
                                        (s.h - s.ht) * std::cos(s.theta_t);
                const double offset_r = std::sin(s.theta_r) * (std::cos(s.psi_r) * x + std::sin(s.psi_r) * y) -
                                        (s.h - s.hr) * std::cos(s.theta_r);
                sum += std::polar(1.0, 2.0 * pi * (offset_t + offset_r) / lambda);
            }
        return sum;
    }

    inline double reflected_length(double ht, double hr, double h, double d)
    {
        return std::sqrt((2.0 * h - ht - hr) * (2.0 * h - ht - hr) + d * d);
    }

    inline double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

    inline double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
} // namespace oracle

#endif
