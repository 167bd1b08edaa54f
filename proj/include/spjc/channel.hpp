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

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace spjc
{
    using cplx = std::complex<double>;
    using cvec = Eigen::VectorXcd;
    using cmat = Eigen::MatrixXcd;

    // Speed of light in vacuum [m/s].
    inline constexpr double speed_of_light = 299792458.0;

    // Reference path-loss coefficient at 1 m.
    inline constexpr double reference_gain = 1.0;

    inline constexpr double deg_to_rad(double deg) noexcept { return deg * std::numbers::pi / 180.0; }
    inline constexpr double rad_to_deg(double rad) noexcept { return rad * 180.0 / std::numbers::pi; }

    inline double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }
    inline double dbm_to_watt(double dbm) noexcept { return 1e-3 * db_to_linear(dbm); }

    // Direction angle (radians, strictly inside (0, pi)) and range (meters) seen from the array.
    struct PolarPosition
    {
        double angle_rad = 0.0;
        double range_m = 0.0;

        static PolarPosition from_degrees(double angle_deg, double range_m);
        double angle_deg() const noexcept { return rad_to_deg(angle_rad); }

        // Throws invalid_config naming `name` when a field is out of its domain.
        void validate(const char *name = "position") const;

        bool operator==(const PolarPosition &) const = default;
    };

    // All physical and protocol parameters of one transmission scenario.
    //
    // Defaults reproduce the reference scenario: 5 MHz over 1024 subcarriers at 3 GHz,
    // half-wavelength spacing, equal CM/AN split, -60 dBm noise at both receivers,
    // Bob at (70 deg, 1000 m), Eve at (100 deg, 750 m), and 20 dB SNR.
    struct ScenarioConfig
    {
        std::size_t num_antennas = 8;
        std::size_t num_subcarriers = 1024;
        double carrier_freq_hz = 3e9;
        double total_bandwidth_hz = 5e6;
        std::optional<double> element_spacing_m; // unset means lambda/2
        double power_alloc = 0.5;                // beta, fraction of P_s given to CM
        double total_power_w = 0.1;              // P_s
        double noise_power_bob_w = 1e-9;         // -60 dBm
        double noise_power_eve_w = 1e-9;
        PolarPosition bob = PolarPosition::from_degrees(70.0, 1000.0);
        PolarPosition eve = PolarPosition::from_degrees(100.0, 750.0);
        std::uint64_t rng_seed = 42;

        double subcarrier_spacing_hz() const noexcept { return total_bandwidth_hz / static_cast<double>(num_subcarriers); }
        double wavelength_m() const noexcept { return speed_of_light / carrier_freq_hz; }
        double spacing_m() const noexcept { return element_spacing_m.value_or(0.5 * wavelength_m()); }

        // Throws invalid_config naming the first violated invariant.
        void validate() const;
    };

    // SNR is referenced through Bob's path loss: SNR = P_s * g_b / sigma_B^2.
    double snr_db(const ScenarioConfig &cfg);
    ScenarioConfig with_snr_db(ScenarioConfig cfg, double snr_db);

    // Per-antenna subcarrier indices k_n, n = 0..N-1; pairwise distinct.
    struct SubcarrierPlan
    {
        std::vector<std::uint32_t> indices;

        std::size_t size() const noexcept { return indices.size(); }
        void validate(std::size_t num_subcarriers) const;
    };

    // N distinct subcarriers drawn uniformly without replacement; deterministic in `seed`.
    SubcarrierPlan build_subcarrier_plan(std::uint64_t seed, std::size_t num_antennas, std::size_t num_subcarriers);

    // Unit-norm array response h(theta, R) together with the position it was evaluated at.
    class SteeringVector
    {
    public:
        SteeringVector(cvec values, PolarPosition origin);

        const cvec &values() const noexcept { return values_; }
        const PolarPosition &origin() const noexcept { return origin_; }
        Eigen::Index size() const noexcept { return values_.size(); }

    private:
        cvec values_;
        PolarPosition origin_;
    };

    // Phases Psi_n(theta, R) for n = 1..N (element 1 has zero geometric offset).
    std::vector<double> steering_phases(const SubcarrierPlan &plan, const ScenarioConfig &cfg, const PolarPosition &pos);

    SteeringVector steering_vector(const SubcarrierPlan &plan, const ScenarioConfig &cfg, const PolarPosition &pos);

    // Writes h(theta, R) into `out` without validation or allocation; used by grid probes.
    void steering_values(const SubcarrierPlan &plan, const ScenarioConfig &cfg, double angle_rad, double range_m,
                         std::span<cplx> out);

    // g_0 * R^-2 with g_0 = 1.
    double path_loss(double range_m);
}
