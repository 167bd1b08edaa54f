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

// Acceptance suite. Each criterion runs at its stated tolerance and prints one line:
//   [PASS] <id> <title>: <measurements> (<seconds> s, budget <seconds> s)
// Usage: acceptance [--criterion N]... ; exit status is nonzero if any selected criterion fails.

#include "oracles.hpp"
#include "spjc/errors.hpp"
#include "spjc/experiments.hpp"
#include "spjc/kernels.hpp"
#include "spjc/metrics.hpp"
#include "spjc/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace spjc;
namespace fs = std::filesystem;

namespace
{
    // Two SR values closer than this are treated as equal (double rounding on values of order 1-10 bits).
    constexpr double sr_tie_bits = 1e-12;

    struct Outcome
    {
        bool pass = false;
        std::string detail;
    };

    struct Criterion
    {
        int id;
        const char *title;
        double budget_s; // 0 = no runtime bound
        std::function<Outcome()> run;
    };

    std::string fmt(const char *format, auto... args)
    {
        char buf[512];
        std::snprintf(buf, sizeof buf, format, args...);
        return buf;
    }

    double rel_err(const cvec &a, const cvec &b) { return (a - b).norm() / b.norm(); }

    std::size_t random_n(std::mt19937_64 &rng) { return std::uniform_int_distribution<std::size_t>(2, 64)(rng); }

    struct Pair
    {
        SteeringVector bob, eve;
    };

    Pair steering_pair(const oracle::RandomScenario &s)
    {
        return {steering_vector(s.plan, s.cfg, s.cfg.bob), steering_vector(s.plan, s.cfg, s.cfg.eve)};
    }

    SubcarrierPlan plan_for(const ScenarioConfig &cfg)
    {
        return build_subcarrier_plan(cfg.rng_seed, cfg.num_antennas, cfg.num_subcarriers);
    }

    // ---------------------------------------------------------------------------------------
    Outcome constraint_residuals()
    {
        std::mt19937_64 rng(1001);
        std::uniform_real_distribution<double> gamma(0.0, 3.0);
        double worst_null = 0.0, worst_pac = 0.0;
        int infeasible = 0;
        for (int trial = 0; trial < 1000; ++trial)
        {
            const auto s = oracle::random_scenario(rng, random_n(rng));
            const auto [hb, he] = steering_pair(s);
            const double g = gamma(rng);
            try
            {
                // Both beams of the pair: CM (target Bob, null Eve) and AN (target Eve, null Bob).
                for (const auto &[t, z] : {std::pair{&hb, &he}, std::pair{&he, &hb}})
                    for (const cvec &v : {min_tp_beamformer(*t, *z), min_rtp_beamformer(*t, *z, g)})
                    {
                        worst_null = std::max(worst_null, std::abs(z->values().dot(v)));
                        worst_pac = std::max(worst_pac, std::abs(t->values().dot(v) - 1.0));
                    }
            }
            catch (const infeasible_geometry &)
            {
                ++infeasible;
            }
        }
        return {worst_null <= 1e-8 && worst_pac <= 1e-8 && infeasible == 0,
                fmt("max |h_null^H v| = %.3e, max |h_target^H v - 1| = %.3e (limit 1e-8), infeasible draws %d",
                    worst_null, worst_pac, infeasible)};
    }

    Outcome oracle_equivalence()
    {
        std::mt19937_64 rng(2002);
        double worst_kkt = 0.0, worst_simple = 0.0;
        for (int trial = 0; trial < 100; ++trial)
        {
            const auto s = oracle::random_scenario(rng, random_n(rng));
            const auto [hb, he] = steering_pair(s);
            const cvec v = min_tp_beamformer(hb, he);
            const cvec &b = hb.values(), &e = he.values();
            const cmat a = cmat::Identity(b.size(), b.size()) - e * e.adjoint();
            const cvec ab = a * b;
            worst_kkt = std::max(worst_kkt, rel_err(v, oracle::kkt_min_norm(b, e)));
            worst_simple = std::max(worst_simple, rel_err(v, ab / ab.squaredNorm()));
        }
        return {worst_kkt <= 1e-8 && worst_simple <= 1e-10,
                fmt("max rel. error vs KKT = %.3e (limit 1e-8), vs A h/||A h||^2 = %.3e (limit 1e-10)", worst_kkt,
                    worst_simple)};
    }

    Outcome regularization_limit()
    {
        std::mt19937_64 rng(3003);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial)
        {
            const auto s = oracle::random_scenario(rng, random_n(rng));
            const auto [hb, he] = steering_pair(s);
            worst = std::max(worst, rel_err(min_rtp_beamformer(hb, he, 1e-12), min_tp_beamformer(hb, he)));
            worst = std::max(worst, rel_err(min_rtp_beamformer(he, hb, 1e-12), min_tp_beamformer(he, hb)));
        }
        return {worst <= 1e-6, fmt("max rel. error Min-RTP(gamma=1e-12) vs Min-TP = %.3e (limit 1e-6)", worst)};
    }

    Outcome awgn_oracle()
    {
        // Reference scenario at Bob with the AN beam switched off; the noise power sets Eb/N0.
        const ScenarioConfig cfg;
        const auto plan = plan_for(cfg);
        BeamPair beams = synthesize(cfg, plan, Method::min_tp);
        beams.w_an.setZero();
        const ReceivedModel base = received_model(cfg, plan, beams, cfg.bob, cfg.noise_power_bob_w);

        constexpr std::uint64_t symbols = 1'000'000;
        bool pass = true;
        std::string detail;
        for (double ebn0_db : {0.0, 4.0, 8.0})
        {
            const double ebn0 = db_to_linear(ebn0_db);
            ReceivedModel m = base;
            m.noise_power = std::norm(base.cm_gain) / (2.0 * ebn0); // Es = 2 Eb, N0 = noise power
            const double ber = ber_monte_carlo(m, symbols, cfg.rng_seed);
            const double theory = oracle::q_function(std::sqrt(2.0 * ebn0));
            const double z = (ber - theory) / oracle::binomial_se(theory, 2.0 * symbols);
            pass = pass && std::abs(z) <= 3.0;
            detail += fmt("%s%g dB: %.5e vs %.5e (z = %+.2f)", detail.empty() ? "" : "; ", ebn0_db, ber, theory, z);
        }
        return {pass, detail + " (limit |z| <= 3)"};
    }

    Outcome gamma_plateau()
    {
        const ScenarioConfig cfg = with_snr_db(ScenarioConfig{}, 20.0);
        const auto grid = default_gamma_grid();
        const auto r = grid_search_gamma(cfg, plan_for(cfg), grid);
        const double variation = relative_variation(r, grid, 0.1, 1.4);
        const auto [lo, hi] = std::minmax_element(r.surface.begin(), r.surface.end());
        return {variation < 0.05, fmt("relative variation on gamma_CM >= 0.1, gamma_AN >= 1.4: %.3e (limit 0.05); "
                                      "surface range [%.6f, %.6f] bits, best at (%.1f, %.1f)",
                                      variation, *lo, *hi, r.best.gamma_cm, r.best.gamma_an)};
    }

    std::size_t nearest(const std::vector<double> &axis, double x)
    {
        std::size_t best = 0;
        for (std::size_t i = 1; i < axis.size(); ++i)
            if (std::abs(axis[i] - x) < std::abs(axis[best] - x))
                best = i;
        return best;
    }

    Outcome dual_peaks()
    {
        ScenarioConfig cfg;
        cfg.num_antennas = 32;
        cfg = with_snr_db(cfg, 20.0);
        const auto plan = plan_for(cfg);
        const auto theta = LinearAxis{30.0, 120.0, 181}.values();
        const auto range = LinearAxis{500.0, 1495.0, 200}.values();
        std::vector<double> angles(theta.size());
        std::transform(theta.begin(), theta.end(), angles.begin(), deg_to_rad);

        const std::size_t bob_cell = nearest(theta, 70.0) * range.size() + nearest(range, 1000.0);
        const std::size_t eve_cell = nearest(theta, 100.0) * range.size() + nearest(range, 750.0);

        bool pass = true;
        std::string detail;
        for (Method m : {Method::ea, Method::min_tp, Method::min_rtp})
        {
            const auto field = sinr_surface(cfg, plan, synthesize(cfg, plan, m), angles, range, cfg.noise_power_bob_w);
            const auto by_cm = [](const SinrSample &a, const SinrSample &b) { return a.cm_sinr_db < b.cm_sinr_db; };
            const auto by_an = [](const SinrSample &a, const SinrSample &b) { return a.an_power_db < b.an_power_db; };
            const auto cm = std::max_element(field.begin(), field.end(), by_cm);
            const auto an = std::max_element(field.begin(), field.end(), by_an);
            const bool ok = static_cast<std::size_t>(cm - field.begin()) == bob_cell &&
                            static_cast<std::size_t>(an - field.begin()) == eve_cell;
            pass = pass && ok;
            detail += fmt("%s%s CM peak (%.1f deg, %.0f m) AN peak (%.1f deg, %.0f m)%s", detail.empty() ? "" : "; ",
                          std::string(method_name(m)).c_str(), cm->theta_deg, cm->range_m, an->theta_deg, an->range_m,
                          ok ? "" : " [off target]");
        }
        return {pass, detail + "; targets Bob (70, 1000), Eve (100, 750)"};
    }

    Outcome sr_ordering()
    {
        const ScenarioConfig cfg;
        const auto plan = plan_for(cfg);
        const std::vector<Method> methods{Method::ea, Method::min_tp, Method::min_rtp};
        const auto snrs = parse_number_list("0:2:30");
        const auto rows = sr_vs_snr(cfg, plan, methods, snrs);
        const std::size_t k = snrs.size();
        auto sr = [&](std::size_t m, std::size_t s) { return rows[m * k + s].value; };

        bool ordered = true, widening = true;
        double prev_gap_tp = -1.0, prev_gap_rtp = -1.0, first_gap = 0.0, last_gap = 0.0;
        std::string violations;
        for (std::size_t s = 0; s < k; ++s)
        {
            if (snrs[s] < 10.0)
                continue;
            const double ea = sr(0, s), tp = sr(1, s), rtp = sr(2, s);
            if (rtp < tp - sr_tie_bits || tp < ea - sr_tie_bits)
            {
                ordered = false;
                violations += fmt(" order@%gdB", snrs[s]);
            }
            const double gap_tp = tp - ea, gap_rtp = rtp - ea;
            if (prev_gap_tp >= 0.0 && (gap_tp <= prev_gap_tp || gap_rtp <= prev_gap_rtp))
            {
                widening = false;
                violations += fmt(" gap@%gdB", snrs[s]);
            }
            if (prev_gap_tp < 0.0)
                first_gap = gap_rtp;
            last_gap = gap_rtp;
            prev_gap_tp = gap_tp;
            prev_gap_rtp = gap_rtp;
        }
        const std::size_t at10 = static_cast<std::size_t>(std::find(snrs.begin(), snrs.end(), 10.0) - snrs.begin());
        return {ordered && widening,
                fmt("SNR >= 10 dB: ordering %s, gap over EA %s (%.4f -> %.4f bits); at 10 dB EA %.4f, MinTP %.4f, "
                    "MinRTP %.4f; ties within %.0e bits%s",
                    ordered ? "holds" : "violated", widening ? "strictly increasing" : "not increasing", first_gap,
                    last_gap, sr(0, at10), sr(1, at10), sr(2, at10), sr_tie_bits,
                    violations.empty() ? "" : ("; violations:" + violations).c_str())};
    }

    Outcome ber_ordering()
    {
        const ScenarioConfig cfg;
        const auto plan = plan_for(cfg);
        const std::vector<Method> methods{Method::ea, Method::min_tp, Method::min_rtp};
        std::vector<double> snrs;
        for (double s : parse_number_list("0:2:30"))
            if (s >= 6.0)
                snrs.push_back(s);
        constexpr std::uint64_t symbols = 1'000'000;
        const auto rows = ber_vs_snr(cfg, plan, methods, snrs, symbols);
        const std::size_t k = snrs.size();
        auto ber = [&](std::size_t m, std::size_t s) { return rows[m * k + s].value; };
        auto within = [&](double lo, double hi) {
            // lo <= hi, allowing 3 combined standard errors.
            const double se = std::hypot(oracle::binomial_se(lo, 2.0 * symbols), oracle::binomial_se(hi, 2.0 * symbols));
            return lo <= hi + 3.0 * se;
        };
        bool pass = true;
        std::string violations;
        for (std::size_t s = 0; s < k; ++s)
            if (!within(ber(2, s), ber(1, s)) || !within(ber(1, s), ber(0, s)))
            {
                pass = false;
                violations += fmt(" %gdB", snrs[s]);
            }
        return {pass, fmt("SNR 6..30 dB, %llu symbols/point; at 6 dB EA %.4e, MinTP %.4e, MinRTP %.4e%s",
                          static_cast<unsigned long long>(symbols), ber(0, 0), ber(1, 0), ber(2, 0),
                          violations.empty() ? "" : ("; violations at" + violations).c_str())};
    }

    Outcome gap_convergence()
    {
        const ScenarioConfig cfg;
        const std::vector<Method> methods{Method::min_tp, Method::min_rtp};
        std::vector<std::size_t> ns;
        for (std::size_t n = 2; n <= 20; ++n)
            ns.push_back(n);
        ns.push_back(64);
        const auto rows = sr_vs_n(cfg, methods, ns, 15.0);
        const std::size_t k = ns.size();
        // Differences below the tie threshold are rounding noise and count as zero.
        auto gap = [&](std::size_t i) {
            const double g = std::abs(rows[k + i].value - rows[i].value);
            return g < sr_tie_bits ? 0.0 : g;
        };
        double max_small = 0.0, raw_max = 0.0;
        for (std::size_t i = 0; i + 1 < k; ++i)
        {
            max_small = std::max(max_small, gap(i));
            raw_max = std::max(raw_max, std::abs(rows[k + i].value - rows[i].value));
        }
        const double at64 = gap(k - 1);
        return {at64 < max_small,
                fmt("|MinRTP - MinTP| at 15 dB: N=64 gap %.3e, max over N in [2,20] %.3e (raw max %.3e, raw N=64 %.3e, "
                    "tie threshold %.0e bits); requires strict decrease",
                    at64, max_small, raw_max, std::abs(rows[2 * k - 1].value - rows[k - 1].value), sr_tie_bits)};
    }

    std::string slurp(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    Outcome determinism()
    {
        const fs::path root = fs::temp_directory_path() / "spjc_acceptance_determinism";
        fs::remove_all(root);
        bool pass = true;
        std::size_t files = 0;
        std::string mismatches;
        const char *saved = std::getenv("SPJC_THREADS");
        const std::string saved_threads = saved ? saved : "";
        for (const char *kind : {"gamma-surface", "sinr-surface", "sr-vs-snr", "sr-vs-n", "ber-vs-snr"})
        {
            ExperimentSpec spec = parse_config(std::string("experiment = ") + kind);
            std::vector<fs::path> outputs[2];
            for (int pass_no = 0; pass_no < 2; ++pass_no)
            {
                // Second run is single-threaded: output must not depend on scheduling.
                if (pass_no == 1)
                    ::setenv("SPJC_THREADS", "1", 1);
                spec.output_dir = root / kind / std::to_string(pass_no);
                outputs[pass_no] = run_experiment(spec).outputs;
                if (saved)
                    ::setenv("SPJC_THREADS", saved_threads.c_str(), 1);
                else
                    ::unsetenv("SPJC_THREADS");
            }
            for (const auto &p : outputs[0])
            {
                ++files;
                if (p.extension() == ".csv" && slurp(p) != slurp(root / kind / "1" / p.filename()))
                {
                    pass = false;
                    mismatches += " " + p.filename().string();
                }
            }
        }
        fs::remove_all(root);
        return {pass, fmt("%zu CSV files from five reference experiments compared across two runs (threads auto vs 1)%s",
                          files, mismatches.empty() ? ": all byte-identical" : ("; differing:" + mismatches).c_str())};
    }

    const std::vector<Criterion> &criteria()
    {
        static const std::vector<Criterion> all{
            {1, "constraint residuals", 10.0, constraint_residuals},
            {2, "oracle equivalence", 5.0, oracle_equivalence},
            {3, "regularization limit", 0.0, regularization_limit},
            {4, "QPSK AWGN oracle", 60.0, awgn_oracle},
            {5, "gamma plateau", 30.0, gamma_plateau},
            {6, "dual peaks", 60.0, dual_peaks},
            {7, "SR ordering", 0.0, sr_ordering},
            {8, "BER ordering", 300.0, ber_ordering},
            {9, "gap convergence", 0.0, gap_convergence},
            {10, "determinism", 0.0, determinism},
        };
        return all;
    }
}

int main(int argc, char **argv)
{
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i)
    {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc)
            selected.push_back(std::atoi(argv[++i]));
        else
        {
            std::cerr << "usage: acceptance [--criterion N]...\n";
            return 2;
        }
    }
    std::cout << "kernels: " << kernels::name(kernels::active().isa) << '\n';

    int failures = 0;
    for (const auto &c : criteria())
    {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end())
            continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = c.run();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::string timing = fmt("%.2f s", secs);
        if (c.budget_s > 0.0)
        {
            timing += fmt(", budget %.0f s", c.budget_s);
            if (secs >= c.budget_s)
            {
                o.pass = false;
                timing += " EXCEEDED";
            }
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.title << ": " << o.detail << " (" << timing
                  << ")" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
