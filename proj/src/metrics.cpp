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

#include "spjc/metrics.hpp"
#include "spjc/errors.hpp"
#include "spjc/kernels.hpp"

#include "parallel.hpp"
#include "rng.hpp"

#include <cmath>
#include <numbers>

namespace spjc
{
    namespace
    {
        constexpr std::uint64_t ber_batch = 1u << 16;
        constexpr std::uint32_t ber_stream_domain = 0xbe7;
    }

    double to_db(double linear) noexcept
    {
        if (!(linear > 0.0))
            return db_floor;
        return std::max(db_floor, 10.0 * std::log10(linear));
    }

    ReceivedModel received_model(const SteeringVector &h, double range_m, const BeamPair &beams, double noise_power)
    {
        if (h.size() != beams.w_cm.size() || h.size() != beams.w_an.size())
            throw invalid_argument("received_model: beam and steering vector lengths differ");
        if (!(noise_power > 0.0))
            throw invalid_argument("received_model: noise power must be positive");
        const double amp = std::sqrt(path_loss(range_m));
        return {amp * h.values().dot(beams.w_cm), amp * h.values().dot(beams.w_an), noise_power};
    }

    ReceivedModel received_model(const ScenarioConfig &cfg, const SubcarrierPlan &plan, const BeamPair &beams,
                                 const PolarPosition &pos, double noise_power)
    {
        return received_model(steering_vector(plan, cfg, pos), pos.range_m, beams, noise_power);
    }

    double sinr(const ReceivedModel &model)
    {
        if (!(model.noise_power > 0.0))
            throw invalid_argument("sinr: noise power must be positive");
        return std::norm(model.cm_gain) / (std::norm(model.an_gain) + model.noise_power);
    }

    double secrecy_rate(const ScenarioConfig &cfg, const SteeringVector &h_bob, const SteeringVector &h_eve,
                        const BeamPair &beams)
    {
        const double sinr_bob = sinr(received_model(h_bob, h_bob.origin().range_m, beams, cfg.noise_power_bob_w));
        const double sinr_eve = sinr(received_model(h_eve, h_eve.origin().range_m, beams, cfg.noise_power_eve_w));
        const double rate = (std::log1p(sinr_bob) - std::log1p(sinr_eve)) / std::numbers::ln2;
        return std::max(rate, 0.0);
    }

    double secrecy_rate(const ScenarioConfig &cfg, const SubcarrierPlan &plan, const BeamPair &beams)
    {
        return secrecy_rate(cfg, steering_vector(plan, cfg, cfg.bob), steering_vector(plan, cfg, cfg.eve), beams);
    }

    std::vector<SinrSample> sinr_surface(const ScenarioConfig &cfg, const SubcarrierPlan &plan, const BeamPair &beams,
                                         std::span<const double> angles_rad, std::span<const double> ranges_m,
                                         double probe_noise)
    {
        if (angles_rad.empty() || ranges_m.empty())
            throw invalid_argument("sinr_surface: angle and range grids must be nonempty");
        if (!(probe_noise > 0.0))
            throw invalid_argument("sinr_surface: probe noise must be positive");
        const std::size_t n = plan.size();
        if (n == 0 || static_cast<std::size_t>(beams.w_cm.size()) != n || static_cast<std::size_t>(beams.w_an.size()) != n)
            throw invalid_argument("sinr_surface: beam and plan lengths differ");
        for (double a : angles_rad)
            PolarPosition{a, 1.0}.validate("grid");
        for (double r : ranges_m)
            PolarPosition{std::numbers::pi / 2, r}.validate("grid");

        const auto &k = kernels::active();
        const std::size_t cols = ranges_m.size();
        std::vector<SinrSample> out(angles_rad.size() * cols);

        detail::parallel_for(angles_rad.size(), [&](std::size_t row) {
            std::vector<cplx> h(n);
            const double theta = angles_rad[row];
            for (std::size_t col = 0; col < cols; ++col)
            {
                const double range = ranges_m[col];
                steering_values(plan, cfg, theta, range, h);
                const double g = path_loss(range);
                const double cm_power = g * std::norm(k.dot_conj(h.data(), beams.w_cm.data(), n));
                const double an_power = g * std::norm(k.dot_conj(h.data(), beams.w_an.data(), n));
                out[row * cols + col] = {rad_to_deg(theta), range, to_db(cm_power / (an_power + probe_noise)),
                                         to_db(an_power / probe_noise)};
            }
        });
        return out;
    }

    double ber_monte_carlo(const ReceivedModel &model, std::uint64_t num_symbols, std::uint64_t seed)
    {
        if (num_symbols == 0)
            throw invalid_argument("ber_monte_carlo: num_symbols must be at least 1");
        if (!(model.noise_power > 0.0))
            throw invalid_argument("ber_monte_carlo: noise power must be positive");

        const auto &k = kernels::active();
        const std::uint64_t batches = (num_symbols + ber_batch - 1) / ber_batch;
        std::vector<std::uint64_t> errors(batches, 0);
        const double an_sigma = std::sqrt(0.5);
        const double noise_sigma = std::sqrt(0.5 * model.noise_power);

        detail::parallel_for(batches, [&](std::size_t b) {
            const std::uint64_t first = b * ber_batch;
            const std::size_t len = static_cast<std::size_t>(std::min(ber_batch, num_symbols - first));
            auto rng = detail::make_stream(seed, b, ber_stream_domain);
            std::normal_distribution<double> gauss(0.0, 1.0);

            std::vector<std::uint8_t> bits(len);
            std::vector<cplx> x(len), z(len), noise(len), y(len);
            for (std::size_t i = 0; i < len; i += 32)
            {
                std::uint64_t word = rng();
                for (std::size_t j = i; j < std::min(len, i + 32); ++j, word >>= 2)
                    bits[j] = static_cast<std::uint8_t>(word & 3u);
            }
            for (std::size_t i = 0; i < len; ++i)
            {
                x[i] = kernels::qpsk_symbol(bits[i]);
                const double zr = gauss(rng), zi = gauss(rng);
                z[i] = {an_sigma * zr, an_sigma * zi};
                const double nr = gauss(rng), ni = gauss(rng);
                noise[i] = {noise_sigma * nr, noise_sigma * ni};
            }
            k.superpose(x.data(), z.data(), noise.data(), model.cm_gain, model.an_gain, y.data(), len);
            errors[b] = k.qpsk_bit_errors(y.data(), model.cm_gain, bits.data(), len);
        });

        std::uint64_t total = 0;
        for (auto e : errors)
            total += e;
        return static_cast<double>(total) / (2.0 * static_cast<double>(num_symbols));
    }

    double ber_monte_carlo(const ScenarioConfig &cfg, const SubcarrierPlan &plan, const BeamPair &beams,
                           const PolarPosition &pos, std::uint64_t num_symbols, std::uint64_t seed)
    {
        const double noise = pos == cfg.eve ? cfg.noise_power_eve_w : cfg.noise_power_bob_w;
        return ber_monte_carlo(received_model(cfg, plan, beams, pos, noise), num_symbols, seed);
    }
}
