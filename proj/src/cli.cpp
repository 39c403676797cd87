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

#include "rispl/cli.hpp"
#include "rispl/error.hpp"
#include "rispl/oracle_checks.hpp"
#include "rispl/pathloss.hpp"
#include "rispl/scenario_io.hpp"
#include "rispl/sweep.hpp"
#include "rispl/units.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

namespace rispl::cli
{
    namespace
    {
        void line(std::ostream &os, const std::string &label, const std::string &value)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%-24s", label.c_str());
            os << buf << value << '\n';
        }

        void line(std::ostream &os, const std::string &label, double value) { line(os, label, format_g6(value)); }

        int report_validation(const ValidationError &e, std::ostream &err)
        {
            for (const auto &issue : e.issues())
                err << "error: " << issue << '\n';
            return validation_error;
        }

        struct ComputeArgs
        {
            std::string scenario;
            std::string model = "general";
            std::string channel = "combined";
        };

        int cmd_compute(const ComputeArgs &a, std::ostream &out)
        {
            const Scenario loaded = load_scenario(a.scenario);
            const Kernel kernel = kernel_from_string(a.model);
            const Channel channel = channel_from_string(a.channel);
            const Scenario s = restrict_to_channel(loaded, channel);

            // Everything is computed before anything is printed.
            std::ostringstream rep;
            const PowerResult r = evaluate(s, kernel);
            const double wavelength = s.wavelength();
            const double h = s.panel.height();
            const double boundary = near_field_boundary(s.panel, wavelength);

            line(rep, "model", std::string(to_string(kernel)));
            line(rep, "channel", std::string(to_string(channel)));
            line(rep, "pr_watts", r.pr_watts);
            line(rep, "pr_dbm", r.pr_dbm);
            line(rep, "pl_db", r.pl_db);

            if (kernel == Kernel::near_field)
            {
                const NearFieldResult nf = received_power_near_field(s);
                line(rep, "pr_dbm_exact_phase", nf.exact.pr_dbm);
                line(rep, "pr_dbm_coherent_term", nf.coherent.pr_dbm);
            }
            if (kernel == Kernel::two_ray)
            {
                const auto se = received_power_single_element(s, reflection_value(*s.panel.uniform_coefficient()));
                line(rep, "pr_dbm_asymptote", se.asymptote.pr_dbm);
            }

            line(rep, "d_l_m", direct_link_distance(s.geometry));
            std::optional<double> dphi;
            if (s.geometry.distance > 0.0)
            {
                dphi = phase_difference(s.geometry, h, wavelength);
                line(rep, "delta_phi_rad", *dphi);
            }
            else
            {
                line(rep, "delta_phi_rad", "undefined (d = 0)");
            }
            line(rep, "elevation_product_m2", elevation_product(s.geometry, h));
            line(rep, "near_field_boundary_m", boundary);

            const double nearest = std::min(s.tx_placement.range(), s.rx_placement.range());
            if (nearest < boundary)
                line(rep, "regime", "near-field (min(d1, d2) = " + format_g6(nearest) + " m < " +
                                        format_g6(boundary) + " m)");
            else
                line(rep, "regime", "far-field (min(d1, d2) = " + format_g6(nearest) + " m >= " +
                                        format_g6(boundary) + " m)");
            if (dphi)
                line(rep, "small_phase", std::abs(*dphi) < 0.1 ? "yes" : "no (|delta_phi| >= 0.1 rad; first-order phase expansions are inaccurate)");

            const GeometricResidual res = geometric_residual(s);
            line(rep, "residual_path_sum_m", res.path_sum);
            line(rep, "residual_ground_m", res.ground_separation);

            out << rep.str();
            return ok;
        }

        struct SweepArgs
        {
            std::string preset;
            std::string scenario;
            std::string param;
            std::string values;
            std::optional<double> from, to, step;
            std::string model;
            std::string channels = "combined,direct,ris";
            std::string format = "csv";
            std::string out = "-";
            unsigned threads = 1;
        };

        std::vector<std::string> split(const std::string &s, char sep)
        {
            std::vector<std::string> parts;
            std::stringstream ss(s);
            std::string item;
            while (std::getline(ss, item, sep))
                if (!item.empty())
                    parts.push_back(item);
            return parts;
        }

        int cmd_sweep(const SweepArgs &a, std::ostream &out, std::ostream &err)
        {
            SweepSpec spec;
            if (!a.preset.empty())
            {
                if (!a.scenario.empty() || !a.param.empty())
                {
                    err << "error: --preset cannot be combined with --scenario or --param\n";
                    return usage_error;
                }
                const auto &names = preset_names();
                if (std::find(names.begin(), names.end(), a.preset) == names.end())
                {
                    try
                    {
                        spec = preset(a.preset);
                    }
                    catch (const ValidationError &e)
                    {
                        for (const auto &issue : e.issues())
                            err << "error: " << issue << '\n';
                    }
                    return usage_error;
                }
                spec = preset(a.preset);
            }
            else
            {
                if (a.scenario.empty() || a.param.empty())
                {
                    err << "error: sweep needs --preset, or --scenario with --param and values\n";
                    return usage_error;
                }
                spec.base = load_scenario(a.scenario);
                spec.parameter = a.param;
                if (!a.values.empty())
                {
                    for (const auto &v : split(a.values, ','))
                    {
                        try
                        {
                            spec.values.push_back(std::stod(v));
                        }
                        catch (const std::exception &)
                        {
                            err << "error: --values entry '" << v << "' is not a number\n";
                            return usage_error;
                        }
                    }
                }
                else if (a.from && a.to && a.step)
                {
                    spec.values = linear_range(*a.from, *a.to, *a.step);
                }
                else
                {
                    err << "error: give --values, or all of --from, --to and --step\n";
                    return usage_error;
                }
                spec.variants = {{"base", {}}};
                spec.model = Kernel::general;
            }
            if (!a.model.empty())
                spec.model = kernel_from_string(a.model);
            if (a.preset.empty() || a.channels != "combined,direct,ris")
            {
                spec.channels.clear();
                for (const auto &c : split(a.channels, ','))
                    spec.channels.push_back(channel_from_string(c));
            }

            const std::vector<SweepRow> rows = run_sweep(spec, a.threads);

            std::ostringstream body;
            if (a.format == "json")
                write_json(body, rows);
            else
                write_csv(body, rows);

            if (a.out == "-")
            {
                out << body.str();
            }
            else
            {
                std::ofstream f(a.out, std::ios::binary);
                if (!f || !(f << body.str()) || !f.flush())
                {
                    err << "error: cannot write sweep output to '" << a.out << "'\n";
                    return failure;
                }
            }

            std::ostream &summary = a.out == "-" ? err : out;
            std::size_t lines = 0;
            for (const auto &r : rows)
                lines += r.channels.size();
            summary << "rows: " << lines << " (" << rows.size() << " points x " << spec.channels.size()
                    << " channels), model " << to_string(spec.model) << '\n';
            std::vector<std::string> order;
            std::map<std::string, std::pair<double, double>> range;
            for (const auto &r : rows)
            {
                if (!range.count(r.variant))
                {
                    order.push_back(r.variant);
                    range[r.variant] = {std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
                }
                auto &[lo, hi] = range[r.variant];
                lo = std::min(lo, r.channels.front().pr_dbm);
                hi = std::max(hi, r.channels.front().pr_dbm);
            }
            for (const auto &v : order)
                summary << "  " << v << ": " << to_string(spec.channels.front()) << " pr_dbm min "
                        << format_g6(range[v].first) << ", max " << format_g6(range[v].second) << '\n';
            return ok;
        }

        int cmd_validate(int panel_size, std::uint64_t seed, std::size_t configs, std::ostream &out, std::ostream &err)
        {
            const ValidationReport report = run_validation(panel_size, seed, configs);
            char buf[160];
            out << "validate: panel " << panel_size << "x" << panel_size << ", seed " << seed << ", " << configs
                << " configurations per check\n";
            std::snprintf(buf, sizeof buf, "%-32s %8s %12s %12s %5s  %s\n", "check", "configs", "max_error",
                          "tolerance", "unit", "status");
            out << buf;
            for (const auto &c : report.checks)
            {
                std::snprintf(buf, sizeof buf, "%-32s %8zu %12.3e %12.3e %5s  %s\n", c.name.c_str(), c.configs,
                              c.max_error, c.tolerance, c.unit.c_str(), c.passed ? "pass" : "FAIL");
                out << buf;
            }
            if (report.passed())
            {
                out << "result: all checks passed\n";
                return ok;
            }
            out << "result: tolerance breach\n";
            for (const auto &c : report.checks)
            {
                if (c.passed || !c.failing)
                    continue;
                nlohmann::ordered_json replay;
                replay["check"] = c.name;
                replay["seed"] = seed;
                replay["panel_size"] = panel_size;
                replay["config_index"] = c.failing_index;
                replay["scenario"] = nlohmann::ordered_json::parse(scenario_to_json(*c.failing, -1));
                err << "error: " << c.name << " exceeded its tolerance; replay configuration:\n"
                    << replay.dump(2) << '\n';
            }
            return tolerance_breach;
        }
    } // namespace

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Received power and path loss of RIS-assisted links with elevated terminals and panel", "rispl"};
        app.require_subcommand(1);

        ComputeArgs compute_args;
        auto *compute = app.add_subcommand("compute", "Evaluate one scenario file");
        compute->add_option("scenario", compute_args.scenario, "Scenario JSON file")->required();
        compute->add_option("--model", compute_args.model, "Kernel")
            ->check(CLI::IsMember({"general", "far-field", "far-field-max", "near-field", "two-ray"}))
            ->capture_default_str();
        compute->add_option("--channel", compute_args.channel, "Received component")
            ->check(CLI::IsMember({"combined", "direct", "ris"}))
            ->capture_default_str();

        SweepArgs sweep_args;
        auto *sweep = app.add_subcommand("sweep", "Run a preset or a one-parameter sweep");
        sweep->add_option("--preset", sweep_args.preset, "fig3a, fig3b, fig4a or fig4b");
        sweep->add_option("--scenario", sweep_args.scenario, "Base scenario JSON file");
        sweep->add_option("--param", sweep_args.param, "Swept scenario field, e.g. d2_m");
        sweep->add_option("--values", sweep_args.values, "Comma-separated values");
        sweep->add_option("--from", sweep_args.from, "First value");
        sweep->add_option("--to", sweep_args.to, "Last value");
        sweep->add_option("--step", sweep_args.step, "Step");
        sweep->add_option("--model", sweep_args.model, "Kernel (overrides the preset's)")
            ->check(CLI::IsMember({"general", "far-field", "far-field-max", "near-field", "two-ray"}));
        sweep->add_option("--channels", sweep_args.channels, "Comma-separated channels")->capture_default_str();
        sweep->add_option("--format", sweep_args.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sweep->add_option("--out", sweep_args.out, "Output path, - for stdout")->capture_default_str();
        sweep->add_option("--threads", sweep_args.threads, "Worker threads")->check(CLI::Range(1u, 256u));

        int panel_size = 8;
        std::uint64_t seed = 1;
        std::size_t configs = 100;
        auto *validate = app.add_subcommand("validate", "Check closed forms against their oracles");
        validate->add_option("--panel-size", panel_size, "Even panel size K, 2..16")
            ->check(CLI::Range(2, 16))
            ->check(CLI::Validator([](std::string &v) { return std::stoi(v) % 2 == 0 ? std::string() : std::string("panel size must be even"); }, "EVEN"))
            ->capture_default_str();
        validate->add_option("--seed", seed, "Random seed")->capture_default_str();
        validate->add_option("--configs", configs, "Configurations per check")->check(CLI::Range(1, 100000))->capture_default_str();

        auto *presets = app.add_subcommand("presets", "List sweep presets");

        std::vector<std::string> argv_storage;
        argv_storage.reserve(args.size() + 1);
        argv_storage.emplace_back("rispl");
        argv_storage.insert(argv_storage.end(), args.begin(), args.end());
        std::vector<char *> argv;
        for (auto &s : argv_storage)
            argv.push_back(s.data());

        try
        {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::CallForHelp &e)
        {
            app.exit(e, out, err);
            return ok;
        }
        catch (const CLI::CallForAllHelp &e)
        {
            app.exit(e, out, err);
            return ok;
        }
        catch (const CLI::ParseError &e)
        {
            app.exit(e, out, err);
            return usage_error;
        }

        try
        {
            if (*compute)
                return cmd_compute(compute_args, out);
            if (*sweep)
                return cmd_sweep(sweep_args, out, err);
            if (*validate)
                return cmd_validate(panel_size, seed, configs, out, err);
            if (*presets)
            {
                for (const auto &name : preset_names())
                {
                    const SweepSpec spec = preset(name);
                    out << name << "  " << to_string(spec.model) << ", " << spec.parameter << " "
                        << format_g6(spec.values.front()) << ".." << format_g6(spec.values.back()) << ", "
                        << spec.variants.size() << " variants\n";
                }
                return ok;
            }
        }
        catch (const ValidationError &e)
        {
            return report_validation(e, err);
        }
        catch (const DomainError &e)
        {
            err << "error: " << e.what() << '\n';
            return validation_error;
        }
        catch (const InvalidGeometry &e)
        {
            err << "error: " << e.what() << '\n';
            return validation_error;
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << '\n';
            return failure;
        }
        return usage_error;
    }

} // namespace rispl::cli
