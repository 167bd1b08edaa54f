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

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "spjc/errors.hpp"
#include "spjc/kernels.hpp"
#include "spjc/metrics.hpp"

#include <algorithm>

using namespace spjc;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    struct Scene
    {
        ScenarioConfig cfg;
        SubcarrierPlan plan;
    };

    Scene reference_scene(std::size_t n = 8)
    {
        Scene s;
        s.cfg.num_antennas = n;
        s.plan = build_subcarrier_plan(s.cfg.rng_seed, n, s.cfg.num_subcarriers);
        return s;
    }

    // Steering vector rebuilt from the literal phase formula with plain std::complex arithmetic.
    std::vector<cplx> literal_steering(const Scene &s, const PolarPosition &p)
    {
        const std::size_t n = s.plan.size();
        std::vector<cplx> h(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            const double psi = static_cast<double>(oracle::literal_phase(s.plan.indices[i], i + 1, s.cfg, p.angle_rad, p.range_m));
            h[i] = std::polar(1.0 / std::sqrt(static_cast<double>(n)), psi);
        }
        return h;
    }

    cplx inner(const std::vector<cplx> &a, const std::vector<cplx> &b)
    {
        cplx acc(0.0);
        for (std::size_t i = 0; i < a.size(); ++i)
            acc += std::conj(a[i]) * b[i];
        return acc;
    }

    // Unit-norm projection of `t` off `z`.
    std::vector<cplx> projected_unit(const std::vector<cplx> &t, const std::vector<cplx> &z)
    {
        const cplx c = inner(z, t);
        std::vector<cplx> v(t.size());
        double norm = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i)
        {
            v[i] = t[i] - z[i] * c;
            norm += std::norm(v[i]);
        }
        for (auto &x : v)
            x /= std::sqrt(norm);
        return v;
    }
}

TEST_CASE("received_model: nulls of Min-TP beams", "[metrics]")
{
    const Scene s = reference_scene();
    const BeamPair b = synthesize(s.cfg, s.plan, Method::min_tp);
    const auto at_bob = received_model(s.cfg, s.plan, b, s.cfg.bob, s.cfg.noise_power_bob_w);
    const auto at_eve = received_model(s.cfg, s.plan, b, s.cfg.eve, s.cfg.noise_power_eve_w);
    CHECK(std::abs(at_bob.an_gain) <= 1e-8 * std::sqrt(path_loss(s.cfg.bob.range_m)) * b.w_an.norm());
    CHECK(std::abs(at_eve.cm_gain) <= 1e-8 * std::sqrt(path_loss(s.cfg.eve.range_m)) * b.w_cm.norm());
    CHECK(std::abs(at_bob.cm_gain) > 0.0);

    BeamPair silent = b;
    silent.w_an.setZero();
    CHECK(received_model(s.cfg, s.plan, silent, s.cfg.eve, 1.0).an_gain == cplx(0.0));
    CHECK_THROWS_AS(received_model(s.cfg, s.plan, b, s.cfg.eve, 0.0), invalid_argument);
}

TEST_CASE("sinr: direct ratios", "[metrics]")
{
    CHECK(sinr({std::sqrt(2.0) * cplx(0.6, 0.8), 0.0, 2.0}) == Catch::Approx(1.0).epsilon(1e-15));
    CHECK(sinr({0.0, cplx(1.0, 1.0), 1.0}) == 0.0);
    // |cm|^2 = 1e-6 * beta * P_s with beta = 0.5, P_s = 0.1 W, sigma^2 = -60 dBm: 5e-8 / 1e-9 = 50.
    CHECK_THAT(sinr({std::sqrt(1e-6 * 0.5 * 0.1), 0.0, 1e-9}), WithinRel(50.0, 1e-13));
    CHECK_THROWS_AS(sinr({1.0, 0.0, 0.0}), invalid_argument);
}

TEST_CASE("secrecy_rate: co-located receivers with equal noise give zero", "[metrics]")
{
    Scene s = reference_scene();
    s.cfg.eve = s.cfg.bob;
    CHECK(secrecy_rate(s.cfg, s.plan, synthesize(s.cfg, s.plan, Method::ea)) == 0.0);
}

TEST_CASE("secrecy_rate: Min-TP reduces to Bob's interference-free capacity", "[metrics][oracle]")
{
    const Scene s = reference_scene();
    const auto &c = s.cfg;
    const double sr = secrecy_rate(c, s.plan, synthesize(c, s.plan, Method::min_tp));

    const auto hb = literal_steering(s, c.bob), he = literal_steering(s, c.eve);
    const double ah2 = std::norm(inner(hb, projected_unit(hb, he)));
    const double reduced = std::log2(1.0 + path_loss(c.bob.range_m) * c.power_alloc * c.total_power_w * ah2 / c.noise_power_bob_w);
    CHECK_THAT(sr, WithinRel(reduced, 1e-9));
}

TEST_CASE("secrecy_rate: scalar recomputation for every method", "[metrics][oracle]")
{
    const Scene s = reference_scene();
    const auto &c = s.cfg;
    const auto hb = literal_steering(s, c.bob), he = literal_steering(s, c.eve);
    const double gb = 1.0 / (c.bob.range_m * c.bob.range_m), ge = 1.0 / (c.eve.range_m * c.eve.range_m);

    auto ea_unit = [](const std::vector<cplx> &h) {
        std::vector<cplx> v(h.size());
        for (std::size_t i = 0; i < h.size(); ++i)
            v[i] = std::polar(1.0 / std::sqrt(static_cast<double>(h.size())), std::arg(h[i]));
        return v;
    };

    for (Method m : {Method::ea, Method::min_tp, Method::min_rtp})
    {
        const auto cm = m == Method::ea ? ea_unit(hb) : projected_unit(hb, he);
        const auto an = m == Method::ea ? ea_unit(he) : projected_unit(he, hb);
        const double pc = c.power_alloc * c.total_power_w, pa = (1.0 - c.power_alloc) * c.total_power_w;
        const double sb = gb * pc * std::norm(inner(hb, cm)) / (gb * pa * std::norm(inner(hb, an)) + c.noise_power_bob_w);
        const double se = ge * pc * std::norm(inner(he, cm)) / (ge * pa * std::norm(inner(he, an)) + c.noise_power_eve_w);
        const double want = std::max(0.0, std::log2(1.0 + sb) - std::log2(1.0 + se));
        INFO(method_name(m));
        CHECK_THAT(secrecy_rate(c, s.plan, synthesize(c, s.plan, m)), WithinAbs(want, 1e-9));
    }
}

TEST_CASE("secrecy_rate: nonnegative and invariant under joint power scaling", "[metrics][property]")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial)
    {
        auto s = oracle::random_scenario(rng, 2 + trial % 20);
        s.cfg.total_power_w = std::pow(10.0, -3.0 + 4.0 * (trial % 7) / 6.0);
        for (Method m : {Method::ea, Method::min_tp})
        {
            const double sr = secrecy_rate(s.cfg, s.plan, synthesize(s.cfg, s.plan, m));
            REQUIRE(sr >= 0.0);
            ScenarioConfig scaled = s.cfg;
            scaled.total_power_w *= 37.0;
            scaled.noise_power_bob_w *= 37.0;
            scaled.noise_power_eve_w *= 37.0;
            REQUIRE_THAT(secrecy_rate(scaled, s.plan, synthesize(scaled, s.plan, m)), WithinAbs(sr, 1e-12 * (1.0 + sr)));
        }
    }
}

TEST_CASE("sinr_surface: peaks at Bob and Eve for Min-TP", "[metrics]")
{
    const Scene s = reference_scene(32);
    const BeamPair b = synthesize(s.cfg, s.plan, Method::min_tp);
    std::vector<double> angles, ranges;
    for (int i = 0; i <= 60; ++i)
        angles.push_back(deg_to_rad(55.0 + 0.75 * i)); // hits 70 and 100 exactly
    for (int i = 0; i < 70; ++i)
        ranges.push_back(600.0 + 10.0 * i);            // hits 750 and 1000 exactly

    const auto field = sinr_surface(s.cfg, s.plan, b, angles, ranges, s.cfg.noise_power_bob_w);
    REQUIRE(field.size() == angles.size() * ranges.size());
    const auto cm_peak = std::max_element(field.begin(), field.end(),
                                          [](const auto &a, const auto &c) { return a.cm_sinr_db < c.cm_sinr_db; });
    const auto an_peak = std::max_element(field.begin(), field.end(),
                                          [](const auto &a, const auto &c) { return a.an_power_db < c.an_power_db; });
    CHECK_THAT(cm_peak->theta_deg, WithinAbs(70.0, 1e-9));
    CHECK(cm_peak->range_m == 1000.0);
    CHECK_THAT(an_peak->theta_deg, WithinAbs(100.0, 1e-9));
    CHECK(an_peak->range_m == 750.0);

    // Leakage at the exact null points is at least 80 dB below the opposite peak.
    auto at = [&](double deg, double r) {
        return *std::find_if(field.begin(), field.end(), [&](const SinrSample &x) {
            return std::abs(x.theta_deg - deg) < 1e-9 && x.range_m == r;
        });
    };
    const double cm_peak_power = path_loss(1000.0) * std::norm(steering_vector(s.plan, s.cfg, s.cfg.bob).values().dot(b.w_cm));
    const double cm_at_eve = path_loss(750.0) * std::norm(steering_vector(s.plan, s.cfg, s.cfg.eve).values().dot(b.w_cm));
    CHECK(10.0 * std::log10(std::max(cm_at_eve, 1e-300) / cm_peak_power) <= -80.0);
    CHECK(at(70.0, 1000.0).an_power_db <= an_peak->an_power_db - 80.0);
}

TEST_CASE("sinr_surface: single point, determinism, and argument checks", "[metrics]")
{
    const Scene s = reference_scene();
    const BeamPair b = synthesize(s.cfg, s.plan, Method::min_rtp);
    const std::vector<double> a{s.cfg.bob.angle_rad}, r{s.cfg.bob.range_m};
    const auto one = sinr_surface(s.cfg, s.plan, b, a, r, s.cfg.noise_power_bob_w);
    REQUIRE(one.size() == 1);
    const double direct = sinr(received_model(s.cfg, s.plan, b, s.cfg.bob, s.cfg.noise_power_bob_w));
    CHECK_THAT(one[0].cm_sinr_db, WithinAbs(10.0 * std::log10(direct), 1e-9));

    const std::vector<double> angles{0.5, 1.0, 2.0}, ranges{100.0, 900.0};
    const auto x = sinr_surface(s.cfg, s.plan, b, angles, ranges, 1e-9);
    const auto y = sinr_surface(s.cfg, s.plan, b, angles, ranges, 1e-9);
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        CHECK(x[i].cm_sinr_db == y[i].cm_sinr_db);
        CHECK(x[i].an_power_db == y[i].an_power_db);
    }

    const std::vector<double> empty;
    CHECK_THROWS_AS(sinr_surface(s.cfg, s.plan, b, empty, r, 1e-9), invalid_argument);
    CHECK_THROWS_AS(sinr_surface(s.cfg, s.plan, b, a, empty, 1e-9), invalid_argument);
    const std::vector<double> bad_angle{0.0};
    CHECK_THROWS_AS(sinr_surface(s.cfg, s.plan, b, bad_angle, r, 1e-9), invalid_config);
}

TEST_CASE("ber_monte_carlo: limiting cases", "[metrics]")
{
    CHECK(ber_monte_carlo({cplx(0.3, 0.4), 0.0, 1e-30}, 50000, 1) == 0.0);
    const double guess = ber_monte_carlo({0.0, cplx(0.1, 0.0), 1.0}, 100000, 2);
    CHECK(std::abs(guess - 0.5) <= 0.01);
    CHECK_THROWS_AS(ber_monte_carlo({1.0, 0.0, 1.0}, 0, 1), invalid_argument);
}

TEST_CASE("ber_monte_carlo: AWGN QPSK matches Q(sqrt(2 Eb/N0))", "[metrics][oracle]")
{
    const std::uint64_t symbols = 1'000'000;
    for (double ebn0_db : {0.0, 4.0, 8.0})
    {
        // Es = |g|^2 = 2 Eb; N0 = noise power.
        const double ebn0 = db_to_linear(ebn0_db);
        const ReceivedModel m{std::polar(std::sqrt(2.0 * ebn0), 0.9), 0.0, 1.0};
        const double p = oracle::q_function(std::sqrt(2.0 * ebn0));
        const double ber = ber_monte_carlo(m, symbols, 77);
        INFO("Eb/N0 = " << ebn0_db << " dB, ber " << ber << " vs " << p);
        CHECK(std::abs(ber - p) <= 3.0 * oracle::binomial_se(p, 2.0 * symbols));
    }
}

TEST_CASE("ber_monte_carlo: deterministic per seed and across kernel variants", "[metrics]")
{
    const ReceivedModel m{cplx(1.0, 0.5), cplx(0.2, -0.1), 0.8};
    const double a = ber_monte_carlo(m, 200'003, 5);
    CHECK(ber_monte_carlo(m, 200'003, 5) == a);
    CHECK(ber_monte_carlo(m, 200'003, 6) != a);

    const auto previous = kernels::active().isa;
    kernels::select(kernels::Isa::scalar);
    const double scalar = ber_monte_carlo(m, 200'003, 5);
    kernels::select(previous);
    CHECK(scalar == a);
}

TEST_CASE("ber_monte_carlo: non-increasing in SNR on average", "[metrics][property]")
{
    const Scene s = reference_scene();
    const std::uint64_t symbols = 20'000;
    double previous = 1.0, previous_se = 0.0;
    for (double snr = 0.0; snr <= 12.0; snr += 2.0)
    {
        const ScenarioConfig cfg = with_snr_db(s.cfg, snr);
        const BeamPair b = synthesize(cfg, s.plan, Method::min_tp);
        double mean = 0.0;
        for (std::uint64_t seed = 0; seed < 5; ++seed)
            mean += ber_monte_carlo(cfg, s.plan, b, cfg.bob, symbols, seed) / 5.0;
        const double se = oracle::binomial_se(mean, 2.0 * symbols * 5);
        REQUIRE(mean <= previous + 3.0 * std::hypot(se, previous_se));
        previous = mean;
        previous_se = se;
    }
}

TEST_CASE("to_db floors zero", "[metrics]")
{
    CHECK(to_db(0.0) == db_floor);
    CHECK(to_db(100.0) == Catch::Approx(20.0));
}
