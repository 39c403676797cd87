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

#include "fixtures.hpp"
#include "oracles.hpp"

#include "rispl/error.hpp"
#include "rispl/geometry.hpp"
#include "rispl/pathloss.hpp"
#include "rispl/units.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace rispl;
using Catch::Approx;

namespace
{
    double friis_of(const Scenario &s)
    {
        const double dl = std::hypot(s.geometry.tx_height - s.geometry.rx_height, s.geometry.distance);
        return oracle::friis_w(oracle::dbm_to_w(s.tx_power_dbm), oracle::c0 / s.frequency_hz, dl, s.gains.tx, s.gains.rx);
    }

    Scenario level_copy(Scenario s)
    {
        s.panel.set_height(s.geometry.tx_height);
        return s;
    }
}

TEST_CASE("unit conversions", "[units]")
{
    CHECK(watts_to_dbm(0.001) == Approx(0.0).margin(1e-12));
    CHECK(watts_to_dbm(1.0) == Approx(30.0));
    CHECK(dbm_to_watts(10.0) == Approx(0.01));
    CHECK_THROWS_AS(watts_to_dbm(0.0), DomainError);
    CHECK_THROWS_AS(watts_to_dbm(-1.0), DomainError);
    CHECK(path_loss_db(10.0, -22.0) == 32.0);
    CHECK(path_loss_db(10.0, 10.0) == 0.0);
    CHECK(path_loss_db(0.0, -30.0) == 30.0);
    CHECK(wavelength_from_frequency(10.5e9) == Approx(0.0285516626));
    CHECK(db_to_linear(21.0) == Approx(125.8925412));
    CHECK(linear_to_db(100.0) == Approx(20.0));
}

TEST_CASE("dBm round trip", "[units][property]")
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> exponent(-15.0, 5.0);
    for (int i = 0; i < 1000; ++i)
    {
        const double w = std::pow(10.0, exponent(rng));
        CHECK(dbm_to_watts(watts_to_dbm(w)) == Approx(w).epsilon(1e-12));
    }
}

TEST_CASE("power results", "[pathloss]")
{
    const PowerResult r = PowerResult::from_watts(1e-6, 10.0);
    CHECK(r.pr_dbm == Approx(-30.0));
    CHECK(r.pl_db == Approx(40.0));
    const PowerResult z = PowerResult::from_watts(0.0, 10.0);
    CHECK(std::isinf(z.pr_dbm));
    CHECK(z.pr_dbm < 0.0);
}

TEST_CASE("general model reduces to Friis without the panel", "[pathloss]")
{
    Scenario s = reference_scenario();
    s.panel.set_uniform(ReflectionCoefficient(0.0, 1.0));
    const PowerResult r = received_power_general(s);
    CHECK(oracle::rel_err(r.pr_watts, friis_of(s)) < 1e-12);
    CHECK(oracle::rel_err(friis_direct(s).pr_watts, friis_of(s)) < 1e-12);
}

TEST_CASE("general model matches an independent element sum", "[pathloss][property]")
{
    oracle::Setup o = specular_setup(100.0, 100.0, 2);
    const Scenario s = scenario_from(o);
    CHECK(oracle::rel_err(received_power_general(s).pr_watts, oracle::general_power_w(o)) < 1e-10);

    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> theta(0.0, 1.5), psi(0.0, 2.0 * oracle::pi), hgt(0.0, 20.0), range(1.0, 400.0),
        amp(0.0, 1.0), gain(0.5, 200.0);
    for (int i = 0; i < 100; ++i)
    {
        oracle::Setup r;
        r.rows = 2 * (1 + i % 4);
        r.cols = 2 * (1 + (i / 4) % 4);
        r.ht = hgt(rng);
        r.hr = hgt(rng);
        r.h = hgt(rng);
        r.d = range(rng);
        r.d1 = range(rng);
        r.d2 = range(rng);
        r.theta_t = theta(rng);
        r.theta_r = theta(rng);
        r.psi_t = psi(rng);
        r.psi_r = psi(rng);
        r.amp = amp(rng);
        r.phase = psi(rng);
        r.gt = gain(rng);
        r.gr = gain(rng);
        r.g = gain(rng) / 100.0;
        r.direct = i % 2 == 0;
        CHECK(oracle::rel_err(received_power_general(scenario_from(r)).pr_watts, oracle::general_power_w(r)) < 1e-9);
    }
}

TEST_CASE("parallel general model is deterministic", "[pathloss]")
{
    const Scenario s = reference_scenario();
    const double serial = received_power_general(s).pr_watts;
    for (unsigned t : {2u, 3u, 8u})
        CHECK(received_power_general(s, {t}).pr_watts == serial);
}

TEST_CASE("general model with directive patterns", "[pathloss]")
{
    Scenario s = reference_scenario();
    s.panel = RisPanel(8, 8, 0.01, 0.01, 10.0);
    const double flat = received_power_general(s).pr_watts;
    s.patterns.cell = PatternModel::cosine_power(1.0);
    const double shaped = received_power_general(s).pr_watts;
    CHECK(shaped < flat);
    CHECK(shaped > 0.0);
}

TEST_CASE("general model rejects invalid scenarios", "[pathloss]")
{
    Scenario s = reference_scenario();
    s.frequency_hz = -1.0;
    s.gains.tx = 0.0;
    try
    {
        received_power_general(s);
        FAIL("invalid scenario accepted");
    }
    catch (const ValidationError &e)
    {
        CHECK(e.issues().size() >= 2);
    }
}

TEST_CASE("two-ray model", "[pathloss]")
{
    const double lambda = 0.03;
    const LinkGeometry g{4.0, 6.0, 300.0};
    const double dl = std::hypot(2.0, 300.0);
    const TwoRayGains unit{};
    const double pt_w = oracle::dbm_to_w(10.0);

    const PowerResult f = received_power_two_ray(g, 7.0, unit, 0.0, lambda, 10.0);
    CHECK(oracle::rel_err(f.pr_watts, oracle::friis_w(pt_w, lambda, dl, 1.0, 1.0)) < 1e-12);

    const PowerResult doubled = received_power_two_ray(g, 4.0, unit, 1.0, lambda, 10.0);
    CHECK(oracle::rel_err(doubled.pr_watts, 4.0 * oracle::friis_w(pt_w, lambda, dl, 1.0, 1.0)) < 1e-12);

    const LinkGeometry ground{5.0, 5.0, 1e5};
    const TwoRayGains ga{10.0, 20.0, 10.0, 20.0};
    const PowerResult bounce = received_power_two_ray(ground, 0.0, ga, -1.0, lambda, 10.0);
    const double textbook = pt_w * 10.0 * 20.0 * std::pow(25.0 / 1e10, 2);
    CHECK(oracle::rel_err(bounce.pr_watts, textbook) < 0.01);
}

TEST_CASE("far-field closed form", "[pathloss]")
{
    oracle::Setup o = specular_setup(100.0, 200.0, 8);
    o.ht = o.hr = o.h = 5.0;
    o.direct = true;
    o.gt = o.gr = 125.0;
    const Scenario s = scenario_from(o);
    CHECK(received_power_far_field(s).pr_watts == Approx(received_power_far_field_max(s).pr_watts).epsilon(1e-12));

    Scenario near = scenario_from(specular_setup(100.0, 150.0, 8));
    Scenario far = near;
    far.tx_placement = AngularPlacement(200.0, near.tx_placement.theta(), near.tx_placement.psi());
    CHECK(received_power_far_field(near).pr_dbm - received_power_far_field(far).pr_dbm == Approx(6.0206).margin(0.3));

    Scenario bad = near;
    bad.geometry.distance = 0.0;
    CHECK_THROWS_AS(received_power_far_field(bad), DomainError);

    std::vector<ReflectionCoefficient> cs(64, ReflectionCoefficient(1.0, 0.0));
    cs[3] = ReflectionCoefficient(0.5, 0.0);
    Scenario mixed = near;
    mixed.panel = RisPanel(8, 8, 0.01, 0.01, 10.0, cs);
    CHECK_THROWS_AS(received_power_far_field(mixed), DomainError);
    CHECK_THROWS_AS(received_power_near_field(mixed), DomainError);
    CHECK_NOTHROW(received_power_general(mixed));
}

TEST_CASE("far-field closed form tracks the general model", "[pathloss]")
{
    double previous = 1e300;
    for (double r : {200.0, 400.0, 800.0})
    {
        const oracle::Setup o = specular_setup(r, r, 8);
        const Scenario s = scenario_from(o);
        const double gap = db_gap(received_power_far_field(s).pr_watts, received_power_general(s).pr_watts);
        CHECK(gap < 0.5);
        CHECK(gap < previous);
        previous = gap;
    }
}

TEST_CASE("far-field maximum", "[pathloss]")
{
    Scenario s = scenario_from(specular_setup(300.0, 300.0, 8));
    s.include_direct = true;
    s.gains = GainSet::from_db(21.0, 21.0, 0.0);
    const double dl = direct_link_distance(s.geometry);
    const double x = elevation_product(s.geometry, s.panel.height());
    const double pt_w = s.tx_power_w();

    Scenario off = s;
    off.panel.set_uniform(ReflectionCoefficient(0.0, 0.0));
    const double extra = pt_w * s.gains.tx * s.gains.rx * x * x / (dl * dl * s.geometry.distance * s.geometry.distance);
    CHECK(oracle::rel_err(received_power_far_field_max(off).pr_watts, friis_of(s) + extra) < 1e-12);

    // Both closed forms expand the same field; they differ by the dropped cross term and the array-factor phase.
    const double c = pt_w * std::pow(s.wavelength() / (4.0 * oracle::pi), 2);
    const double direct = std::sqrt(s.gains.tx * s.gains.rx) / dl;
    const double ris = 64.0 * std::sqrt(s.gains.tx * s.gains.rx * s.gains.cell * 1e-4) / (2.0 * std::sqrt(oracle::pi) * 300.0 * 300.0);
    const double dphi = phase_difference(s.geometry, s.panel.height(), s.wavelength());
    const double bound = c * (4.0 * direct * ris + 2.0 * direct * std::abs(dphi) * ris);
    const double p5 = received_power_far_field(s).pr_watts;
    const double p6 = received_power_far_field_max(s).pr_watts;
    INFO("far-field " << p5 << " W, maximum form " << p6 << " W");
    CHECK(std::abs(p5 - p6) <= bound * (1.0 + 1e-9));
}

TEST_CASE("single element model", "[pathloss]")
{
    Scenario s = reference_scenario();
    s.geometry = {4.0, 6.0, 400.0};
    const SingleElementResult zero = received_power_single_element(s, 0.0);
    CHECK(oracle::rel_err(zero.two_ray.pr_watts, friis_of(s)) < 1e-12);

    Scenario level = s;
    level.panel.set_height(4.0);
    CHECK(received_power_single_element(level, -1.0).asymptote.pr_watts == 0.0);

    Scenario wide = s;
    wide.panel.set_height(0.0);
    wide.geometry = {4.0, 6.0, 0.0};
    wide.geometry.distance = 4.0 * oracle::pi * 24.0 / (wide.wavelength() * 0.04);
    const SingleElementResult r = received_power_single_element(wide, -1.0);
    CHECK(std::abs(phase_difference(wide.geometry, 0.0, wide.wavelength())) < 0.05);
    CHECK(oracle::rel_err(r.two_ray.pr_watts, r.asymptote.pr_watts) < 0.01);
}

TEST_CASE("near-field forms", "[pathloss]")
{
    Scenario s = reference_scenario();
    s.panel.set_uniform(ReflectionCoefficient(0.0, 0.7));
    const NearFieldResult zero = received_power_near_field(s);
    CHECK(oracle::rel_err(zero.simplified.pr_watts, friis_of(s)) < 1e-12);
    CHECK(oracle::rel_err(zero.exact.pr_watts, friis_of(s)) < 1e-12);

    Scenario level = reference_scenario();
    level.panel.set_height(2.0);
    const double dl = direct_link_distance(level.geometry);
    level.tx_placement = AngularPlacement(0.3 * dl, oracle::pi / 4.0, oracle::pi);
    level.rx_placement = AngularPlacement(0.7 * dl, oracle::pi / 4.0, 0.0);
    const NearFieldResult agree = received_power_near_field(level);
    CHECK(agree.simplified.pr_watts == Approx(agree.exact.pr_watts).epsilon(1e-9));
    CHECK(agree.simplified.pr_watts == agree.coherent.pr_watts);
}

TEST_CASE("near-field boundary", "[pathloss]")
{
    const RisPanel p(8, 6, 0.1, 0.1, 0.0);
    CHECK(p.aperture_diagonal() == Approx(1.0));
    CHECK(near_field_boundary(p, 0.03) == Approx(66.6667).epsilon(1e-5));
    double previous = 1e300;
    for (double lambda : {0.01, 0.1, 1.0, 10.0, 100.0})
    {
        const double b = near_field_boundary(p, lambda);
        CHECK(b < previous);
        CHECK(b > 0.0);
        previous = b;
    }
    CHECK_THROWS_AS(near_field_boundary(p, 0.0), DomainError);

    const double lambda = oracle::c0 / 10.5e9;
    const double pitch = std::sqrt(71.4 * lambda / 2.0 / (100.0 * 100.0 + 102.0 * 102.0));
    INFO("pitch giving a 71.4 m boundary for a 100x102 panel: " << pitch << " m");
    CHECK(near_field_boundary(RisPanel(100, 102, pitch, pitch, 0.0), lambda) == Approx(71.4));
}

TEST_CASE("phase optimum and conjugate symmetry", "[pathloss][property]")
{
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> amp(0.01, 5.0), ph(-10.0, 10.0);
    for (int i = 0; i < 1000; ++i)
    {
        const double d = amp(rng), r = amp(rng), phi = ph(rng), p = ph(rng);
        CHECK(coherent_sum_power(d, r, phi, p) == Approx(coherent_sum_power(d, r, -phi, -p)).epsilon(1e-12));
        CHECK(coherent_sum_power(d, r, 0.0, 0.0) >= coherent_sum_power(d, r, phi, 0.0));
    }

    Scenario s = reference_scenario();
    s.tx_placement = AngularPlacement(2.0, oracle::pi / 4.0, oracle::pi);
    s.rx_placement = AngularPlacement(20.0, oracle::pi / 4.0, 0.0);
    s.panel.set_uniform(ReflectionCoefficient(1.0, 0.0));
    const double best = received_power_near_field(s).simplified.pr_watts;
    for (double phi = 0.1; phi < 2.0 * oracle::pi; phi += 0.1)
    {
        s.panel.set_uniform(ReflectionCoefficient(1.0, phi));
        CHECK(received_power_near_field(s).simplified.pr_watts <= best);
    }
}

TEST_CASE("all kernels return consistent power results", "[pathloss][property]")
{
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> hgt(0.0, 20.0), range(20.0, 500.0), psi(0.0, 2.0 * oracle::pi);
    for (int i = 0; i < 50; ++i)
    {
        Scenario s = reference_scenario();
        s.panel = RisPanel(8, 8, 0.01, 0.01, hgt(rng), ReflectionCoefficient(1.0, psi(rng)));
        s.geometry = {hgt(rng), hgt(rng), range(rng)};
        s.tx_placement = AngularPlacement(range(rng), 0.6, psi(rng));
        s.rx_placement = AngularPlacement(range(rng), 0.8, psi(rng));
        for (Kernel k : {Kernel::general, Kernel::far_field, Kernel::far_field_max, Kernel::near_field, Kernel::two_ray})
        {
            const PowerResult r = evaluate(s, k);
            CHECK(r.pr_watts >= 0.0);
            CHECK(r.pl_db + r.pr_dbm == Approx(s.tx_power_dbm).margin(1e-12));
        }
    }
}

TEST_CASE("kernel and channel names", "[pathloss]")
{
    CHECK(kernel_from_string("far-field") == Kernel::far_field);
    CHECK(kernel_from_string("far_field_max") == Kernel::far_field_max);
    CHECK(to_string(Kernel::two_ray) == "two-ray");
    CHECK(channel_from_string("ris") == Channel::ris_only);
    CHECK(channel_from_string("direct") == Channel::direct_only);
    CHECK(to_string(Channel::direct_only) == "direct_only");
    CHECK_THROWS(kernel_from_string("bogus"));
    CHECK_THROWS(channel_from_string("bogus"));

    const Scenario s = reference_scenario();
    const Scenario d = restrict_to_channel(s, Channel::direct_only);
    CHECK(d.panel.uniform_coefficient()->amplitude() == 0.0);
    CHECK(d.include_direct);
    CHECK_FALSE(restrict_to_channel(s, Channel::ris_only).include_direct);
}
