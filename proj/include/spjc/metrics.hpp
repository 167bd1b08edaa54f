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

#include <cstdint>
#include <span>
#include <vector>

namespace spjc
{
    // Complex effective gains seen by a single-antenna receiver:
    //   y = cm_gain * x + an_gain * z + n,  n ~ CN(0, noise_power)
    struct ReceivedModel
    {
        cplx cm_gain;
        cplx an_gain;
        double noise_power = 0.0;
    };

    ReceivedModel received_model(const SteeringVector &h, double range_m, const BeamPair &beams, double noise_power);

    ReceivedModel received_model(const ScenarioConfig &cfg, const SubcarrierPlan &plan, const BeamPair &beams,
                                 const PolarPosition &pos, double noise_power);

    // |cm_gain|^2 / (|an_gain|^2 + noise_power)
    double sinr(const ReceivedModel &model);

    // max{log2(1 + SINR_Bob) - log2(1 + SINR_Eve), 0} in bits per channel use.
    double secrecy_rate(const ScenarioConfig &cfg, const SteeringVector &h_bob, const SteeringVector &h_eve,
                        const BeamPair &beams);

    double secrecy_rate(const ScenarioConfig &cfg, const SubcarrierPlan &plan, const BeamPair &beams);

    // One probe point of the angle-range field.
    struct SinrSample
    {
        double theta_deg;
        double range_m;
        double cm_sinr_db;  // CM SINR of a receiver at this point
        double an_power_db; // received AN power relative to the probe noise
    };

    // Floor applied to dB values whose linear argument is exactly zero.
    inline constexpr double db_floor = -300.0;

    double to_db(double linear) noexcept;

    // Row-major over (angle, range): sample index = i_angle * ranges.size() + i_range.
    // Angles in radians; every point must be a valid PolarPosition.
    std::vector<SinrSample> sinr_surface(const ScenarioConfig &cfg, const SubcarrierPlan &plan, const BeamPair &beams,
                                         std::span<const double> angles_rad, std::span<const double> ranges_m,
                                         double probe_noise);

    // Monte Carlo bit-error rate of Gray QPSK with genie-aided coherent detection, AN treated as
    // noise. Deterministic in `seed`, independent of thread scheduling.
    double ber_monte_carlo(const ReceivedModel &model, std::uint64_t num_symbols, std::uint64_t seed);

    // Noise power is sigma_E^2 when `pos` equals Eve's configured position, sigma_B^2 otherwise.
    double ber_monte_carlo(const ScenarioConfig &cfg, const SubcarrierPlan &plan, const BeamPair &beams,
                           const PolarPosition &pos, std::uint64_t num_symbols, std::uint64_t seed);

    // Curve row: (SNR dB | N) -> (SR bits | BER) for one method.
    struct MetricSample
    {
        Method method;
        double axis;
        double value;
    };
}
