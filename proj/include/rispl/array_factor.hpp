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

#ifndef RISPL_ARRAY_FACTOR_HPP
#define RISPL_ARRAY_FACTOR_HPP

#include "rispl/geometry.hpp"
#include "rispl/panel.hpp"

#include <complex>

namespace rispl
{
    /// Normalized sinc, sin(pi x) / (pi x), with sinc(0) = 1.
    double sinc(double x);

    /// sinc(count u) / sinc(u) = sin(pi count u) / (count sin(pi u)).
    ///
    /// The quotient is 0/0 at every integer u (grating lobes). It is evaluated on the offset
    /// e = u - round(u), where the ratio reduces to +-sin(pi count e) / (count sin(pi e)) exactly,
    /// and a series is used once |e| < 1e-8. The result lies in [-1, 1].
    double dirichlet_ratio(double u, int count);

    /// Closed form of the phase sum over all elements with linearized distances,
    ///   sum_{n,m} exp(j 2 pi (d_1 + d_2 - r^t - r^r) / lambda)
    ///     = M N exp(-j 2 pi ((h - h_t) cos th_t + (h - h_r) cos th_r) / lambda) D_M(u_x) D_N(u_y),
    /// with u_x = (sin th_t cos ps_t + sin th_r cos ps_r) d_x / lambda and u_y likewise with sines and d_y.
    /// |result| <= M N.
    std::complex<double> array_factor(const RisPanel &panel, const AngularPlacement &tx, const AngularPlacement &rx,
                                      double wavelength, const LinkGeometry &g);

} // namespace rispl

#endif
