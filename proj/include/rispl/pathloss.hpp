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

#ifndef RISPL_PATHLOSS_HPP
#define RISPL_PATHLOSS_HPP

#include "rispl/scenario.hpp"

#include <complex>

namespace rispl
{
    struct GeneralOptions
    {
        /// Worker threads for the element sum. Results do not depend on this value.
        unsigned threads = 1;
    };

    /// Element-by-element model with exact distances:
    ///   P_r = P_t (lambda / 4 pi)^2 | D + S |^2,
    ///   D = sqrt(G_t G_r F_direct) / d_l,
    ///   S = sqrt(G_r G_t G d_x d_y) / (2 sqrt(pi)) sum_{n,m} sqrt(F_nm) Gamma_nm / (r^t r^r) e^{-j 2 pi (r^t + r^r - d_l) / lambda}.
    /// Terminal positions come from the angular placements.
    PowerResult received_power_general(const Scenario &s, const GeneralOptions &opt = {});

    /// Linear gains of the two rays: (a, b) on the direct path, (c, d) on the reflected one.
    struct TwoRayGains
    {
        double los_tx = 1.0;
        double los_rx = 1.0;
        double reflected_tx = 1.0;
        double reflected_rx = 1.0;
    };

    /// Classical two-ray combination with the asymptotic phase difference of phase_difference():
    ///   P_r = P_t (lambda / 4 pi)^2 | sqrt(G_a G_b) / d_l + Gamma sqrt(G_c G_d) e^{-j dphi} / (d_1 + d_2) |^2
    /// where d_1 + d_2 = reflected_path_length().
    PowerResult received_power_two_ray(const LinkGeometry &g, double ris_height, const TwoRayGains &gains,
                                       std::complex<double> gamma, double wavelength, double tx_power_dbm);

    /// Far-field closed form for a uniform panel (Gamma = A e^{j phi}):
    ///   P_r = P_t (lambda / 4 pi)^2 | sqrt(G_t G_r) / d_l (1 + j 4 pi X / (lambda d))
    ///        + A e^{j phi} sqrt(G_r G_t G F(th_t, ps_t) F(th_r, ps_r) d_x d_y) / (2 sqrt(pi) d_1 d_2) AF |^2
    /// with AF from array_factor(). Throws DomainError for d = 0 or a non-uniform panel.
    PowerResult received_power_far_field(const Scenario &s);

    /// Specular far-field maximum:
    ///   P_t (lambda / 4 pi)^2 | sqrt(G_t G_r) / d_l + M N A e^{j phi} K / (d_1 d_2) |^2 + P_t G_t G_r X^2 / (d_l^2 d^2),
    /// K = sqrt(G_r G_t G F F d_x d_y) / (2 sqrt(pi)). The last term belongs to the direct path and is
    /// dropped together with it.
    PowerResult received_power_far_field_max(const Scenario &s);

    struct SingleElementResult
    {
        /// Two-ray form with gains G_t G_r on both paths.
        PowerResult two_ray;
        /// Large-distance limit P_t [sqrt(G_t G_r) X / d^2]^2, which follows from the two-ray form for Gamma = -1.
        PowerResult asymptote;
    };

    SingleElementResult received_power_single_element(const Scenario &s, std::complex<double> gamma);

    struct NearFieldResult
    {
        /// P_t (lambda / 4 pi)^2 | D + A e^{j phi} sqrt(G_r G_t) / (d_1 + d_2) |^2 + P_t A^2 G_r G_t X^2 / ((d_1 + d_2)^2 d^2)
        PowerResult simplified;
        /// P_t (lambda / 4 pi)^2 | D + A e^{j phi} sqrt(G_r G_t) / (d_1 + d_2) e^{-j 2 pi (d_1 + d_2 - d_l) / lambda} |^2
        PowerResult exact;
        /// The first term of `simplified` alone, i.e. `exact` with the path phase set to zero.
        PowerResult coherent;
    };

    /// Near-field broadcasting forms for a uniform panel. d_1 + d_2 is the sum of the placement ranges.
    /// Throws DomainError for d = 0 or a non-uniform panel.
    NearFieldResult received_power_near_field(const Scenario &s);

    /// Fraunhofer distance 2 D^2 / lambda of the panel aperture (D = aperture diagonal). Advisory only.
    double near_field_boundary(const RisPanel &panel, double wavelength);

    /// |D + R e^{j phi} e^{-j path_phase}|^2 for real amplitudes D and R.
    double coherent_sum_power(double direct_amplitude, double ris_amplitude, double phi, double path_phase);

    /// Dispatches to one kernel. near_field returns the simplified channel; two_ray uses G_t G_r on
    /// both rays, the panel height and the panel's uniform coefficient.
    PowerResult evaluate(const Scenario &s, Kernel k);

    /// Free-space reference P_t (lambda / (4 pi d_l))^2 G_t G_r F_direct.
    PowerResult friis_direct(const Scenario &s);

} // namespace rispl

#endif
