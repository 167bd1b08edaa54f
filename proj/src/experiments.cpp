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

#include "spjc/experiments.hpp"
#include "spjc/errors.hpp"
#include "spjc/kernels.hpp"
#include "spjc/search.hpp"

#include "parallel.hpp"
#include "rng.hpp"

#include <json.hpp>

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <system_error>

#ifndef SPJC_VERSION
#define SPJC_VERSION "0.0.0"
#endif

namespace spjc
{
    namespace
    {
        constexpr std::uint32_t ber_seed_domain = 0x5eed;

        std::string fmt(double v)
        {
            char buf[64];
            const auto res = std::to_chars(buf, buf + sizeof buf, v);
            return std::string(buf, res.ptr);
        }

        std::string utc_now()
        {
            const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
            std::tm tm{};
            gmtime_r(&now, &tm);
            char buf[32];
            std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
            return buf;
        }

        void write_atomically(const std::filesystem::path &path, const std::string &contents)
        {
            std::filesystem::path tmp = path;
            tmp += ".tmp";
            {
                std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
                if (!out)
                    throw io_error("cannot open '" + tmp.string() + "' for writing");
                out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
                out.flush();
                if (!out)
                    throw io_error("write failed for '" + tmp.string() + "'");
            }
            std::error_code ec;
            std::filesystem::rename(tmp, path, ec);
            if (ec)
                throw io_error("cannot rename '" + tmp.string() + "' to '" + path.string() + "': " + ec.message());
        }

        class CsvWriter
        {
        public:
            explicit CsvWriter(std::string_view header) : text_(header) { text_ += '\n'; }

            template <typename... T>
            void row(T... values)
            {
                std::size_t i = 0;
                ((text_ += (i++ ? "," : ""), text_ += fmt(static_cast<double>(values))), ...);
                text_ += '\n';
            }

            const std::string &text() const noexcept { return text_; }

        private:
            std::string text_;
        };

        std::vector<MetricSample> for_method(const std::vector<MetricSample> &rows, Method m)
        {
            std::vector<MetricSample> out;
            for (const auto &r : rows)
                if (r.method == m)
                    out.push_back(r);
            return out;
        }

        struct Outputs
        {
            std::filesystem::path dir;
            RunManifest &manifest;

            void write(const std::string &name, const std::string &contents)
            {
                const auto path = dir / name;
                write_atomically(path, contents);
                manifest.outputs.push_back(path);
            }
        };

        std::string snr_tag(double snr)
        {
            std::string s = fmt(snr);
            for (char &c : s)
                if (c == '.')
                    c = 'p';
                else if (c == '-')
                    c = 'm';
            return s;
        }
    }

    std::string_view software_version() noexcept { return SPJC_VERSION; }

    std::vector<MetricSample> sr_vs_snr(const ScenarioConfig &cfg, const SubcarrierPlan &plan,
                                        std::span<const Method> methods, std::span<const double> snr_db,
                                        const RegularizationParams &gammas)
    {
        cfg.validate();
        const SteeringVector h_bob = steering_vector(plan, cfg, cfg.bob);
        const SteeringVector h_eve = steering_vector(plan, cfg, cfg.eve);
        std::vector<MetricSample> rows(methods.size() * snr_db.size());
        detail::parallel_for(rows.size(), [&](std::size_t idx) {
            const Method m = methods[idx / snr_db.size()];
            const double snr = snr_db[idx % snr_db.size()];
            const ScenarioConfig at = with_snr_db(cfg, snr);
            rows[idx] = {m, snr, secrecy_rate(at, h_bob, h_eve, synthesize(at, h_bob, h_eve, m, gammas))};
        });
        return rows;
    }

    std::vector<MetricSample> sr_vs_n(const ScenarioConfig &cfg, std::span<const Method> methods,
                                      std::span<const std::size_t> n_list, double snr_db,
                                      const RegularizationParams &gammas)
    {
        std::vector<MetricSample> rows(methods.size() * n_list.size());
        detail::parallel_for(n_list.size(), [&](std::size_t i) {
            ScenarioConfig at = with_snr_db(cfg, snr_db);
            at.num_antennas = n_list[i];
            at.validate();
            const SubcarrierPlan plan = build_subcarrier_plan(at.rng_seed, at.num_antennas, at.num_subcarriers);
            const SteeringVector h_bob = steering_vector(plan, at, at.bob);
            const SteeringVector h_eve = steering_vector(plan, at, at.eve);
            for (std::size_t m = 0; m < methods.size(); ++m)
                rows[m * n_list.size() + i] = {methods[m], static_cast<double>(n_list[i]),
                                               secrecy_rate(at, h_bob, h_eve,
                                                            synthesize(at, h_bob, h_eve, methods[m], gammas))};
        });
        return rows;
    }

    std::vector<MetricSample> ber_vs_snr(const ScenarioConfig &cfg, const SubcarrierPlan &plan,
                                         std::span<const Method> methods, std::span<const double> snr_db,
                                         std::uint64_t num_symbols, const RegularizationParams &gammas)
    {
        cfg.validate();
        const SteeringVector h_bob = steering_vector(plan, cfg, cfg.bob);
        const SteeringVector h_eve = steering_vector(plan, cfg, cfg.eve);
        std::vector<MetricSample> rows(methods.size() * snr_db.size());
        // Sweep points run one after another; each BER estimate parallelizes over its own batches.
        for (std::size_t s = 0; s < snr_db.size(); ++s)
        {
            const ScenarioConfig at = with_snr_db(cfg, snr_db[s]);
            const std::uint64_t seed = detail::make_stream(cfg.rng_seed, s, ber_seed_domain)();
            for (std::size_t m = 0; m < methods.size(); ++m)
            {
                const BeamPair beams = synthesize(at, h_bob, h_eve, methods[m], gammas);
                const ReceivedModel model = received_model(h_bob, at.bob.range_m, beams, at.noise_power_bob_w);
                rows[m * snr_db.size() + s] = {methods[m], snr_db[s], ber_monte_carlo(model, num_symbols, seed)};
            }
        }
        return rows;
    }

    RunManifest run_experiment(const ExperimentSpec &spec)
    {
        spec.validate();
        RunManifest manifest;
        manifest.experiment = std::string(experiment_name(spec.kind));
        manifest.config_echo = to_config_text(spec);
        manifest.seed = spec.scenario.rng_seed;
        manifest.version = std::string(software_version());
        manifest.kernels = std::string(kernels::name(kernels::active().isa));
        manifest.started_utc = utc_now();

        std::error_code ec;
        std::filesystem::create_directories(spec.output_dir, ec);
        if (ec)
            throw io_error("cannot create output directory '" + spec.output_dir.string() + "': " + ec.message());
        Outputs out{spec.output_dir, manifest};

        const ScenarioConfig &cfg = spec.scenario;
        const auto make_plan = [&cfg] { return build_subcarrier_plan(cfg.rng_seed, cfg.num_antennas, cfg.num_subcarriers); };

        switch (spec.kind)
        {
        case ExperimentKind::gamma_surface:
        {
            const GammaSearchResult r = grid_search_gamma(cfg, make_plan(), spec.gamma_grid);
            CsvWriter csv("gamma_cm,gamma_an,sr");
            for (std::size_t i = 0; i < r.rows; ++i)
                for (std::size_t j = 0; j < r.cols; ++j)
                    csv.row(spec.gamma_grid.gamma_cm_values[i], spec.gamma_grid.gamma_an_values[j], r.at(i, j));
            out.write("gamma_surface.csv", csv.text());
            manifest.summary = {{"best_gamma_cm", fmt(r.best.gamma_cm)},
                                {"best_gamma_an", fmt(r.best.gamma_an)},
                                {"best_sr", fmt(r.best_sr)}};
            break;
        }
        case ExperimentKind::sinr_surface:
        {
            const SubcarrierPlan plan = make_plan();
            std::vector<double> angles = spec.theta_deg.values();
            for (double &a : angles)
                a = deg_to_rad(a);
            const std::vector<double> ranges = spec.range_m.values();
            for (Method m : spec.methods)
            {
                const BeamPair beams = synthesize(cfg, plan, m, spec.gammas);
                CsvWriter csv("theta_deg,range_m,cm_sinr_db,an_power_db");
                for (const auto &s : sinr_surface(cfg, plan, beams, angles, ranges, cfg.noise_power_bob_w))
                    csv.row(s.theta_deg, s.range_m, s.cm_sinr_db, s.an_power_db);
                out.write("sinr_surface_" + std::string(method_name(m)) + ".csv", csv.text());
            }
            break;
        }
        case ExperimentKind::sr_vs_snr:
        {
            const auto rows = sr_vs_snr(cfg, make_plan(), spec.methods, spec.snr_list, spec.gammas);
            for (Method m : spec.methods)
            {
                CsvWriter csv("snr_db,sr_bits");
                for (const auto &r : for_method(rows, m))
                    csv.row(r.axis, r.value);
                out.write("sr_vs_snr_" + std::string(method_name(m)) + ".csv", csv.text());
            }
            break;
        }
        case ExperimentKind::sr_vs_n:
        {
            for (double snr : spec.snr_list)
            {
                const auto rows = sr_vs_n(cfg, spec.methods, spec.n_list, snr, spec.gammas);
                for (Method m : spec.methods)
                {
                    CsvWriter csv("n,sr_bits");
                    for (const auto &r : for_method(rows, m))
                        csv.row(r.axis, r.value);
                    out.write("sr_vs_n_" + std::string(method_name(m)) + "_snr" + snr_tag(snr) + "db.csv", csv.text());
                }
            }
            break;
        }
        case ExperimentKind::ber_vs_snr:
        {
            const auto rows = ber_vs_snr(cfg, make_plan(), spec.methods, spec.snr_list, spec.mc_symbols, spec.gammas);
            for (Method m : spec.methods)
            {
                CsvWriter csv("snr_db,ber");
                for (const auto &r : for_method(rows, m))
                    csv.row(r.axis, r.value);
                out.write("ber_vs_snr_" + std::string(method_name(m)) + ".csv", csv.text());
            }
            break;
        }
        }

        manifest.finished_utc = utc_now();

        nlohmann::ordered_json j;
        j["experiment"] = manifest.experiment;
        j["version"] = manifest.version;
        j["seed"] = manifest.seed;
        j["kernels"] = manifest.kernels;
        j["started_utc"] = manifest.started_utc;
        j["finished_utc"] = manifest.finished_utc;
        j["config"] = manifest.config_echo;
        j["outputs"] = nlohmann::json::array();
        for (const auto &p : manifest.outputs)
            j["outputs"].push_back(p.filename().string());
        j["summary"] = nlohmann::ordered_json::object();
        for (const auto &[k, v] : manifest.summary)
            j["summary"][k] = v;
        write_atomically(spec.output_dir / "manifest.json", j.dump(2) + "\n");
        return manifest;
    }
}
