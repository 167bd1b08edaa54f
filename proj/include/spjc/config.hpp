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

#pragma once

#include "spjc/beamformers.hpp"
#include "spjc/channel.hpp"
#include "spjc/search.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spjc
{
    enum class ExperimentKind
    {
        gamma_surface, // SR over the (gamma_CM, gamma_AN) grid
        sinr_surface,  // CM-SINR and AN-power fields over angle x range
        sr_vs_snr,
        sr_vs_n,
        ber_vs_snr,
    };

    // "gamma-surface", "sinr-surface", "sr-vs-snr", "sr-vs-n", "ber-vs-snr"
    std::string_view experiment_name(ExperimentKind kind) noexcept;

    // Accepts the names above with '-' or '_' separators.
    ExperimentKind parse_experiment(std::string_view text);

    // Linear probe axis: `points` values from `min` to `max` inclusive.
    struct LinearAxis
    {
        double min = 0.0;
        double max = 0.0;
        std::size_t points = 1;

        std::vector<double> values() const;
    };

    struct ExperimentSpec
    {
        ExperimentKind kind = ExperimentKind::sr_vs_snr;
        ScenarioConfig scenario;        // total power set from snr_db
        double snr_db = 20.0;           // operating point for single-SNR experiments
        std::vector<double> snr_list;   // sweep for sr_vs_snr / ber_vs_snr; SNR set for sr_vs_n
        std::vector<std::size_t> n_list; // sweep for sr_vs_n
        std::vector<Method> methods{Method::ea, Method::min_tp, Method::min_rtp};
        RegularizationParams gammas = default_gammas;
        GammaGrid gamma_grid = default_gamma_grid();
        LinearAxis theta_deg{30.0, 120.0, 181};
        LinearAxis range_m{500.0, 1495.0, 200};
        std::uint64_t mc_symbols = 1'000'000;
        std::filesystem::path output_dir = "out";

        // The primary sweep axis of this experiment kind.
        std::vector<double> sweep() const;

        // Throws invalid_config naming the violated field.
        void validate() const;
    };

    using Setting = std::pair<std::string, std::string>;

    // Parses the flat key = value format. '#' and ';' start comments; [section] headers are
    // accepted and ignored. `overrides` are applied after the file contents, in order.
    // Omitted keys take the reference-scenario defaults for the selected experiment.
    // Throws parse_error (with line number) or invalid_config.
    ExperimentSpec parse_config(std::string_view text, const std::vector<Setting> &overrides = {});

    ExperimentSpec load_config(const std::filesystem::path &path, const std::vector<Setting> &overrides = {});

    // Comma-separated numbers and start:step:stop ranges (inclusive), e.g. "0:2:30" or "2:2:20, 24, 32".
    std::vector<double> parse_number_list(std::string_view text);

    // Resolved spec as key = value text that parse_config accepts back.
    std::string to_config_text(const ExperimentSpec &spec);
}
