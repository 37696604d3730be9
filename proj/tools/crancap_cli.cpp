// SPDX-License-Identifier: Apache-2.0
//
// crancap: uplink capacity analysis of RRH association in cloud RANs
// Copyright (C) 2026 The crancap authors
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

#include "crancap/config.hpp"
#include "crancap/sweep.hpp"
#include "crancap/validation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

struct RawFlags {
    std::map<std::string, std::optional<std::string>> values;
    std::optional<std::string> config;
    bool bps = false;
};

void add_param_flags(CLI::App* cmd, RawFlags& flags, bool sweep_flags)
{
    auto add = [&](const std::string& name, const std::string& help) {
        cmd->add_option("--" + name, flags.values[name], help);
    };
    add("lambda", "RRH density per m^2 (default 1e-4)");
    add("antennas", "antennas per RRH, L (default 4)");
    add("alpha", "path-loss exponent (default 4)");
    add("tx-power-dbm", "user transmit power in dBm (default 10)");
    add("noise-psd-dbm-hz", "noise power spectral density in dBm/Hz (default -174)");
    add("bandwidth-hz", "system bandwidth in Hz (default 1e8)");
    add("radius-m", "deployment disc radius in m (default 600)");
    add("trials", "Monte Carlo trials");
    add("seed", "64-bit seed");
    add("out", "output file");
    if (sweep_flags) {
        add("assoc-n", "comma list of association orders, e.g. 1,2,4,inf");
        add("strategy", "nearest or best");
        add("axis", "tx_power | num_antennas | lambda | assoc_n");
        add("values", "comma list of sweep values (tx_power in dBm)");
        add("methods", "comma list of closed, numeric, mc");
        add("thresholds-db", "comma list of SNR thresholds in dB; adds outage records");
        add("limit-n", "RRHs used for the N -> infinity curve in Monte Carlo (default 64)");
        cmd->add_flag("--bps", flags.bps, "report capacity in bps instead of bps/Hz");
    }
    cmd->add_option("--config", flags.config, "JSON config file; flags take precedence");
}

crancap::FlagMap to_flag_map(const RawFlags& flags)
{
    crancap::FlagMap out;
    for (const auto& [k, v] : flags.values)
        if (v)
            out[k] = *v;
    if (flags.bps)
        out["bps"] = "true";
    return out;
}

std::optional<std::filesystem::path> config_path(const RawFlags& flags)
{
    if (!flags.config)
        return std::nullopt;
    return std::filesystem::path(*flags.config);
}

int run_sweep_command(const crancap::SweepSpec& spec)
{
    const auto outcome = crancap::run_sweep(spec);
    if (spec.output_path.empty())
        crancap::write_csv(std::cout, outcome.records);
    else
        std::cerr << "wrote " << outcome.records.size() << " records to " << spec.output_path << " (+ .meta.json)\n";
    for (const auto& g : outcome.limit_gaps)
        std::cerr << "nearest:inf gap at " << g.axis_value << ": bound " << g.bound << " - mc " << g.monte_carlo
                  << " = " << g.gap << '\n';
    for (const auto& w : outcome.warnings)
        std::cerr << "warning: " << w << '\n';
    for (const auto& f : outcome.failures)
        std::cerr << "quadrature failure: " << f << '\n';
    return outcome.failures.empty() ? 0 : 2;
}

int run_validate_command(const crancap::SweepSpec& spec)
{
    const auto params = crancap::build_params(spec.fixed);
    const auto report = crancap::validate_run(params, spec.trials, spec.seed);
    report.print(std::cout);
    if (!spec.output_path.empty()) {
        std::ofstream out(spec.output_path);
        if (!out)
            throw crancap::ParamError("field 'out': cannot open '" + spec.output_path + "'");
        report.print(out);
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"crancap: capacity and outage of RRH association in cloud RAN uplinks"};
    app.require_subcommand(1);

    RawFlags sweep_flags, validate_flags, fig1_flags, fig2_flags;
    auto* sweep = app.add_subcommand("sweep", "evaluate methods over a parameter sweep and write CSV");
    auto* validate = app.add_subcommand("validate", "run the analytic vs Monte Carlo cross-check matrix");
    auto* fig1 = app.add_subcommand("fig1", "capacity versus transmit power, N in {1,2,4,8,inf}");
    auto* fig2 = app.add_subcommand("fig2", "capacity versus antenna count, N in {1,2,4,8,inf}");
    add_param_flags(sweep, sweep_flags, true);
    add_param_flags(validate, validate_flags, false);
    add_param_flags(fig1, fig1_flags, true);
    add_param_flags(fig2, fig2_flags, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep)
            return run_sweep_command(crancap::parse_config(to_flag_map(sweep_flags), config_path(sweep_flags)));
        if (*validate) {
            crancap::SweepSpec base;
            base.trials = 100000;
            return run_validate_command(
                crancap::parse_config(to_flag_map(validate_flags), config_path(validate_flags), base));
        }
        if (*fig1)
            return run_sweep_command(
                crancap::parse_config(to_flag_map(fig1_flags), config_path(fig1_flags), crancap::preset_fig1()));
        if (*fig2)
            return run_sweep_command(
                crancap::parse_config(to_flag_map(fig2_flags), config_path(fig2_flags), crancap::preset_fig2()));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
