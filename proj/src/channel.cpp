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

#include "spjc/channel.hpp"
#include "spjc/errors.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace spjc
{
    PolarPosition PolarPosition::from_degrees(double angle_deg, double range_m)
    {
        return {deg_to_rad(angle_deg), range_m};
    }

    void PolarPosition::validate(const char *name) const
    {
        const std::string n(name);
        if (!(angle_rad > 0.0 && angle_rad < std::numbers::pi))
            throw invalid_config(n + ".angle", "must lie strictly inside (0, 180) degrees");
        if (!(range_m > 0.0) || !std::isfinite(range_m))
            throw invalid_config(n + ".range", "must be positive and finite");
    }

    void ScenarioConfig::validate() const
    {
        if (num_antennas < 2)
            throw invalid_config("num_antennas", "must be at least 2");
        if (num_subcarriers < num_antennas)
            throw invalid_config("num_subcarriers", "must be >= num_antennas (N > N_S)");
        if (!(carrier_freq_hz > 0.0) || !std::isfinite(carrier_freq_hz))
            throw invalid_config("carrier_freq_hz", "must be positive");
        if (!(total_bandwidth_hz > 0.0) || !std::isfinite(total_bandwidth_hz))
            throw invalid_config("total_bandwidth_hz", "must be positive (subcarrier spacing > 0)");
        // N_S * df must stay far below the carrier.
        if (total_bandwidth_hz > carrier_freq_hz / 10.0)
            throw invalid_config("total_bandwidth_hz", "N_S * df must not exceed carrier_freq_hz / 10");
        if (element_spacing_m && !(*element_spacing_m > 0.0))
            throw invalid_config("element_spacing_m", "must be positive");
        if (!(power_alloc >= 0.0 && power_alloc <= 1.0))
            throw invalid_config("power_alloc", "beta must lie in [0, 1]");
        if (!(total_power_w > 0.0) || !std::isfinite(total_power_w))
            throw invalid_config("total_power_w", "must be positive");
        if (!(noise_power_bob_w > 0.0))
            throw invalid_config("noise_power_bob", "must be positive");
        if (!(noise_power_eve_w > 0.0))
            throw invalid_config("noise_power_eve", "must be positive");
        bob.validate("bob");
        eve.validate("eve");
    }

    double snr_db(const ScenarioConfig &cfg)
    {
        return 10.0 * std::log10(cfg.total_power_w * path_loss(cfg.bob.range_m) / cfg.noise_power_bob_w);
    }

    ScenarioConfig with_snr_db(ScenarioConfig cfg, double snr)
    {
        cfg.total_power_w = db_to_linear(snr) * cfg.noise_power_bob_w / path_loss(cfg.bob.range_m);
        return cfg;
    }

    void SubcarrierPlan::validate(std::size_t num_subcarriers) const
    {
        std::vector<bool> seen(num_subcarriers, false);
        for (auto k : indices)
        {
            if (k >= num_subcarriers)
                throw invalid_config("subcarrier_plan", "index " + std::to_string(k) + " out of range");
            if (seen[k])
                throw invalid_config("subcarrier_plan", "duplicate index " + std::to_string(k));
            seen[k] = true;
        }
    }

    SubcarrierPlan build_subcarrier_plan(std::uint64_t seed, std::size_t num_antennas, std::size_t num_subcarriers)
    {
        if (num_antennas == 0)
            throw invalid_config("num_antennas", "must be positive");
        if (num_antennas > num_subcarriers)
            throw invalid_config("num_subcarriers", "must be >= num_antennas (N > N_S)");
        if (num_subcarriers > std::numeric_limits<std::uint32_t>::max())
            throw invalid_config("num_subcarriers", "too large");

        // Partial Fisher-Yates: the first N slots form a uniform ordered sample without replacement.
        std::vector<std::uint32_t> pool(num_subcarriers);
        std::iota(pool.begin(), pool.end(), 0u);
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < num_antennas; ++i)
        {
            std::uniform_int_distribution<std::size_t> pick(i, num_subcarriers - 1);
            std::swap(pool[i], pool[pick(rng)]);
        }
        pool.resize(num_antennas);
        return SubcarrierPlan{std::move(pool)};
    }

    SteeringVector::SteeringVector(cvec values, PolarPosition origin)
        : values_(std::move(values)), origin_(origin)
    {
        if (values_.size() == 0 || std::abs(values_.norm() - 1.0) > 1e-12)
            throw invalid_argument("steering vector must have unit Euclidean norm");
    }

    // Psi_n = 2 pi (f_c + k_n df)(R - (n-1) d cos theta)/c - 2 pi f_c R/c, rearranged so the two
    // large carrier terms cancel analytically:
    //   Psi_n = 2 pi k_n df R/c - 2 pi (f_c + k_n df)(n-1) d cos theta / c
    template <typename Fn>
    static void for_each_phase(const SubcarrierPlan &plan, const ScenarioConfig &cfg, double angle_rad,
                               double range_m, Fn &&fn)
    {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        const double df = cfg.subcarrier_spacing_hz();
        const double geometric = cfg.spacing_m() * std::cos(angle_rad);
        for (std::size_t i = 0; i < plan.size(); ++i)
        {
            const double offset_hz = static_cast<double>(plan.indices[i]) * df;
            const double freq = cfg.carrier_freq_hz + offset_hz;
            const double psi = two_pi * (offset_hz * range_m - freq * static_cast<double>(i) * geometric) / speed_of_light;
            fn(i, psi);
        }
    }

    std::vector<double> steering_phases(const SubcarrierPlan &plan, const ScenarioConfig &cfg, const PolarPosition &pos)
    {
        std::vector<double> out(plan.size());
        for_each_phase(plan, cfg, pos.angle_rad, pos.range_m, [&](std::size_t i, double psi) { out[i] = psi; });
        return out;
    }

    void steering_values(const SubcarrierPlan &plan, const ScenarioConfig &cfg, double angle_rad, double range_m,
                         std::span<cplx> out)
    {
        const double scale = 1.0 / std::sqrt(static_cast<double>(plan.size()));
        for_each_phase(plan, cfg, angle_rad, range_m,
                       [&](std::size_t i, double psi) { out[i] = cplx(scale * std::cos(psi), scale * std::sin(psi)); });
    }

    SteeringVector steering_vector(const SubcarrierPlan &plan, const ScenarioConfig &cfg, const PolarPosition &pos)
    {
        if (plan.size() == 0)
            throw invalid_argument("steering_vector: empty subcarrier plan");
        pos.validate();
        cvec h(static_cast<Eigen::Index>(plan.size()));
        steering_values(plan, cfg, pos.angle_rad, pos.range_m, std::span<cplx>(h.data(), plan.size()));
        return SteeringVector(std::move(h), pos);
    }

    double path_loss(double range_m)
    {
        if (!(range_m > 0.0))
            throw domain_error("path_loss: range must be positive");
        return reference_gain / (range_m * range_m);
    }
}
