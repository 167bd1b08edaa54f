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

#include "spjc/config.hpp"
#include "spjc/metrics.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spjc
{
    // Secrecy rate per method and SNR on a fixed plan. Rows are method-major, SNR order preserved.
    std::vector<MetricSample> sr_vs_snr(const ScenarioConfig &cfg, const SubcarrierPlan &plan,
                                        std::span<const Method> methods, std::span<const double> snr_db,
                                        const RegularizationParams &gammas = default_gammas);

    // Secrecy rate per method and array size at one SNR; each N draws its plan from cfg.rng_seed.
    std::vector<MetricSample> sr_vs_n(const ScenarioConfig &cfg, std::span<const Method> methods,
                                      std::span<const std::size_t> n_list, double snr_db,
                                      const RegularizationParams &gammas = default_gammas);

    // Bob's Monte Carlo BER per method and SNR. All methods at one SNR share the random stream
    // derived from (cfg.rng_seed, sweep index).
    std::vector<MetricSample> ber_vs_snr(const ScenarioConfig &cfg, const SubcarrierPlan &plan,
                                         std::span<const Method> methods, std::span<const double> snr_db,
                                         std::uint64_t num_symbols,
                                         const RegularizationParams &gammas = default_gammas);

    struct RunManifest
    {
        std::string experiment;
        std::string config_echo; // resolved key = value text
        std::uint64_t seed = 0;
        std::string version;
        std::string kernels;
        std::string started_utc;
        std::string finished_utc;
        std::vector<std::filesystem::path> outputs;
        std::vector<std::pair<std::string, std::string>> summary;
    };

    // Runs one experiment, writing one CSV per method (the gamma surface is Min-RTP only) into
    // spec.output_dir, then manifest.json. Files are written to a temporary name and renamed.
    RunManifest run_experiment(const ExperimentSpec &spec);

    // Version tag recorded in manifests.
    std::string_view software_version() noexcept;
}
