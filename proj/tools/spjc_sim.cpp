// SPDX-License-Identifier: Apache-2.0
//
// spjc-sim: beamforming simulator for secure precise jamming and communication
// Copyright (C) 2026 The spjc-sim Authors
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

// spjc-sim: command-line runner for the beamforming experiments.
//
//   spjc-sim sr-vs-snr --config scenario.ini --method MinTP,MinRTP --out results/
//   spjc-sim run --experiment ber-vs-snr --mc-symbols 100000
//
// Output directory precedence: --out, then $SPJC_OUT_DIR, then output_dir in the config file.

#include "spjc/config.hpp"
#include "spjc/errors.hpp"
#include "spjc/experiments.hpp"
#include "spjc/kernels.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

namespace
{
    struct Options
    {
        std::string config;
        std::string experiment;
        std::string methods;
        std::optional<std::uint64_t> seed;
        std::string out;
        std::string snr_list;
        std::string n_list;
        std::optional<std::uint64_t> mc_symbols;
        std::string grid;
        std::string kernels = "auto";
        std::vector<std::string> settings;
        bool dry_run = false;
    };

    void add_common(CLI::App &cmd, Options &o)
    {
        cmd.add_option("-c,--config", o.config, "Scenario file (key = value)")->check(CLI::ExistingFile);
        cmd.add_option("-m,--method", o.methods, "Comma-separated methods: EA, MinTP, MinRTP");
        cmd.add_option("-s,--seed", o.seed, "RNG seed (subcarrier plan and Monte Carlo streams)");
        cmd.add_option("-o,--out", o.out, "Output directory");
        cmd.add_option("--snr-list", o.snr_list, "SNR values in dB: comma-separated numbers and start:step:stop ranges");
        cmd.add_option("--n-list", o.n_list, "Antenna counts: comma-separated numbers and start:step:stop ranges");
        cmd.add_option("--mc-symbols", o.mc_symbols, "QPSK symbols per BER point");
        cmd.add_option("--grid", o.grid, "Grid size: N or AxB (gamma grid, or angle x range probe grid)");
        cmd.add_option("--kernels", o.kernels, "Kernel variant: auto, scalar, avx2")
            ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
        cmd.add_option("--set", o.settings, "Extra key=value setting (repeatable)");
        cmd.add_flag("--dry-run", o.dry_run, "Print the resolved configuration and exit");
    }

    std::vector<spjc::Setting> overrides_from(const Options &o, const std::string &experiment)
    {
        std::vector<spjc::Setting> s;
        if (!experiment.empty())
            s.emplace_back("experiment", experiment);
        if (!o.methods.empty())
            s.emplace_back("methods", o.methods);
        if (o.seed)
            s.emplace_back("rng_seed", std::to_string(*o.seed));
        if (!o.snr_list.empty())
            s.emplace_back("snr_list", o.snr_list);
        if (!o.n_list.empty())
            s.emplace_back("n_list", o.n_list);
        if (o.mc_symbols)
            s.emplace_back("mc_symbols", std::to_string(*o.mc_symbols));
        if (!o.grid.empty())
            s.emplace_back("grid", o.grid);
        for (const auto &kv : o.settings)
        {
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw spjc::invalid_argument("--set expects key=value, got '" + kv + "'");
            s.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
        }
        if (!o.out.empty())
            s.emplace_back("output_dir", o.out);
        else if (const char *env = std::getenv("SPJC_OUT_DIR"); env && *env)
            s.emplace_back("output_dir", env);
        return s;
    }

    int execute(const Options &o, const std::string &experiment)
    {
        spjc::kernels::select(o.kernels);
        const auto overrides = overrides_from(o, experiment);
        const spjc::ExperimentSpec spec =
            o.config.empty() ? spjc::parse_config("", overrides) : spjc::load_config(o.config, overrides);

        if (o.dry_run)
        {
            std::cout << spjc::to_config_text(spec);
            return 0;
        }

        const auto manifest = spjc::run_experiment(spec);
        for (const auto &p : manifest.outputs)
            std::cout << p.string() << '\n';
        for (const auto &[k, v] : manifest.summary)
            std::cout << k << " = " << v << '\n';
        std::cout << (spec.output_dir / "manifest.json").string() << '\n';
        return 0;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Secure precise jamming and communication beamforming simulator"};
    app.set_version_flag("--version", std::string(spjc::software_version()));
    app.require_subcommand(1);

    Options opts;
    std::string chosen;

    struct Sub
    {
        const char *name;
        const char *help;
    };
    const Sub subs[] = {
        {"gamma-surface", "Min-RTP secrecy rate over the (gamma_CM, gamma_AN) grid"},
        {"sinr-surface", "CM-SINR and AN-power fields over angle x range"},
        {"sr-vs-snr", "Secrecy rate versus SNR"},
        {"sr-vs-n", "Secrecy rate versus number of antennas"},
        {"ber-vs-snr", "Monte Carlo QPSK BER at Bob versus SNR"},
    };
    for (const auto &s : subs)
    {
        auto *cmd = app.add_subcommand(s.name, s.help);
        add_common(*cmd, opts);
        cmd->callback([&chosen, name = std::string(s.name)] { chosen = name; });
    }
    auto *run = app.add_subcommand("run", "Run the experiment named by --experiment or the config file");
    add_common(*run, opts);
    run->add_option("-e,--experiment", opts.experiment, "gamma-surface, sinr-surface, sr-vs-snr, sr-vs-n, ber-vs-snr");
    run->callback([&chosen, &opts] { chosen = opts.experiment; });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        // --help and --version exit 0; every usage error shares the configuration-error status.
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try
    {
        return execute(opts, chosen);
    }
    catch (const spjc::error &e)
    {
        std::cerr << "spjc-sim: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "spjc-sim: unexpected error: " << e.what() << '\n';
        return 3;
    }
}
