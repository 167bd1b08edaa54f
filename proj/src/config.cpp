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

#include "spjc/config.hpp"
#include "spjc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace spjc
{
    namespace
    {
        struct Entry
        {
            std::string key;
            std::string value;
            std::size_t line; // 0 for command-line overrides
        };

        std::string_view trim(std::string_view s)
        {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.remove_prefix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }

        std::string normalize_key(std::string_view s)
        {
            std::string out;
            for (char c : trim(s))
                out.push_back(c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            return out;
        }

        [[noreturn]] void fail(const Entry &e, const std::string &what)
        {
            if (e.line == 0)
                throw parse_error(0, "command line: " + e.key + ": " + what);
            throw parse_error(e.line, e.key + ": " + what);
        }

        std::optional<double> to_double(std::string_view text)
        {
            text = trim(text);
            if (!text.empty() && text.front() == '+')
                text.remove_prefix(1);
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
                return std::nullopt;
            return v;
        }

        double number(const Entry &e)
        {
            const auto v = to_double(e.value);
            if (!v || !std::isfinite(*v))
                fail(e, "expected a number, got '" + e.value + "'");
            return *v;
        }

        std::uint64_t count(const Entry &e)
        {
            const double v = number(e);
            if (v < 0.0 || v != std::floor(v) || v > 9.0e15)
                fail(e, "expected a nonnegative integer, got '" + e.value + "'");
            return static_cast<std::uint64_t>(v);
        }

        std::vector<std::string_view> split(std::string_view text, char sep)
        {
            std::vector<std::string_view> parts;
            std::size_t start = 0;
            for (std::size_t i = 0; i <= text.size(); ++i)
                if (i == text.size() || text[i] == sep)
                {
                    parts.push_back(trim(text.substr(start, i - start)));
                    start = i + 1;
                }
            return parts;
        }

        // "31" -> {31, 31}; "181x200" -> {181, 200}
        std::pair<std::size_t, std::size_t> grid_dims(const Entry &e)
        {
            std::string lower = e.value;
            std::transform(lower.begin(), lower.end(), lower.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
            const auto parts = split(lower, 'x');
            if (parts.size() > 2)
                fail(e, "expected N or AxB");
            std::size_t dims[2];
            for (std::size_t i = 0; i < 2; ++i)
            {
                const auto v = to_double(parts[std::min(i, parts.size() - 1)]);
                if (!v || *v < 1.0 || *v != std::floor(*v) || *v > 1e7)
                    fail(e, "grid dimensions must be positive integers");
                dims[i] = static_cast<std::size_t>(*v);
            }
            return {dims[0], dims[1]};
        }

        std::vector<std::size_t> default_n_list()
        {
            return {2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 24, 32, 48, 64};
        }

        std::string format_number(double v)
        {
            char buf[64];
            const auto res = std::to_chars(buf, buf + sizeof buf, v);
            return std::string(buf, res.ptr);
        }

        template <typename T>
        std::string join(const std::vector<T> &values)
        {
            std::string out;
            for (std::size_t i = 0; i < values.size(); ++i)
            {
                if (i)
                    out += ", ";
                if constexpr (std::is_floating_point_v<T>)
                    out += format_number(values[i]);
                else
                    out += std::to_string(values[i]);
            }
            return out;
        }

        std::vector<Entry> tokenize(std::string_view text)
        {
            std::vector<Entry> entries;
            std::size_t line_no = 0;
            std::size_t pos = 0;
            while (pos <= text.size())
            {
                const std::size_t eol = std::min(text.find('\n', pos), text.size());
                std::string_view line = text.substr(pos, eol - pos);
                ++line_no;
                pos = eol + 1;

                if (const auto c = line.find_first_of("#;"); c != std::string_view::npos)
                    line = line.substr(0, c);
                line = trim(line);
                if (line.empty())
                {
                    if (eol == text.size())
                        break;
                    continue;
                }
                if (line.front() == '[')
                {
                    if (line.back() != ']')
                        throw parse_error(line_no, "unterminated section header");
                }
                else
                {
                    const auto eq = line.find('=');
                    if (eq == std::string_view::npos)
                        throw parse_error(line_no, "expected 'key = value'");
                    const std::string key = normalize_key(line.substr(0, eq));
                    if (key.empty())
                        throw parse_error(line_no, "missing key before '='");
                    entries.push_back({key, std::string(trim(line.substr(eq + 1))), line_no});
                }
                if (eol == text.size())
                    break;
            }
            return entries;
        }

        using Handler = std::function<void(ExperimentSpec &, const Entry &)>;

        struct Resolution
        {
            bool power_given = false;
            bool snr_given = false;
        };

        std::map<std::string, Handler> make_handlers(Resolution &res)
        {
            std::map<std::string, Handler> h;
            h["experiment"] = [](ExperimentSpec &, const Entry &) {}; // resolved in the first pass
            h["modulation"] = [](ExperimentSpec &, const Entry &e) {
                if (normalize_key(e.value) != "qpsk")
                    fail(e, "only qpsk is supported");
            };
            h["num_antennas"] = [](ExperimentSpec &s, const Entry &e) { s.scenario.num_antennas = count(e); };
            h["num_subcarriers"] = [](ExperimentSpec &s, const Entry &e) { s.scenario.num_subcarriers = count(e); };
            h["carrier_freq_hz"] = [](ExperimentSpec &s, const Entry &e) { s.scenario.carrier_freq_hz = number(e); };
            h["total_bandwidth_hz"] = [](ExperimentSpec &s, const Entry &e) { s.scenario.total_bandwidth_hz = number(e); };
            h["element_spacing_m"] = [](ExperimentSpec &s, const Entry &e) { s.scenario.element_spacing_m = number(e); };
            h["power_alloc"] = [](ExperimentSpec &s, const Entry &e) { s.scenario.power_alloc = number(e); };
            h["beta"] = h["power_alloc"];
            h["total_power_w"] = [&res](ExperimentSpec &s, const Entry &e) {
                s.scenario.total_power_w = number(e);
                res.power_given = true;
            };
            h["snr_db"] = [&res](ExperimentSpec &s, const Entry &e) {
                s.snr_db = number(e);
                res.snr_given = true;
            };
            h["noise_power_bob_dbm"] = [](ExperimentSpec &s, const Entry &e) { s.scenario.noise_power_bob_w = dbm_to_watt(number(e)); };
            h["noise_power_eve_dbm"] = [](ExperimentSpec &s, const Entry &e) { s.scenario.noise_power_eve_w = dbm_to_watt(number(e)); };
            h["noise_power_dbm"] = [](ExperimentSpec &s, const Entry &e) {
                s.scenario.noise_power_bob_w = s.scenario.noise_power_eve_w = dbm_to_watt(number(e));
            };
            h["bob_angle_deg"] = [](ExperimentSpec &s, const Entry &e) { s.scenario.bob.angle_rad = deg_to_rad(number(e)); };
            h["bob_range_m"] = [](ExperimentSpec &s, const Entry &e) { s.scenario.bob.range_m = number(e); };
            h["eve_angle_deg"] = [](ExperimentSpec &s, const Entry &e) { s.scenario.eve.angle_rad = deg_to_rad(number(e)); };
            h["eve_range_m"] = [](ExperimentSpec &s, const Entry &e) { s.scenario.eve.range_m = number(e); };
            h["rng_seed"] = [](ExperimentSpec &s, const Entry &e) { s.scenario.rng_seed = count(e); };
            h["seed"] = h["rng_seed"];
            h["gamma_cm"] = [](ExperimentSpec &s, const Entry &e) { s.gammas.gamma_cm = number(e); };
            h["gamma_an"] = [](ExperimentSpec &s, const Entry &e) { s.gammas.gamma_an = number(e); };
            h["gamma_max"] = [](ExperimentSpec &s, const Entry &e) {
                const double max = number(e);
                if (!(max > 0.0))
                    fail(e, "must be positive");
                s.gamma_grid = GammaGrid::linear(s.gamma_grid.gamma_cm_values.size(), s.gamma_grid.gamma_an_values.size(), max);
            };
            h["grid"] = [](ExperimentSpec &s, const Entry &e) {
                const auto [a, b] = grid_dims(e);
                if (s.kind == ExperimentKind::sinr_surface)
                {
                    s.theta_deg.points = a;
                    s.range_m.points = b;
                }
                else
                {
                    const double max = s.gamma_grid.gamma_cm_values.size() > 1 ? s.gamma_grid.gamma_cm_values.back() : 3.0;
                    s.gamma_grid = GammaGrid::linear(a, b, max);
                }
            };
            h["snr_list"] = [](ExperimentSpec &s, const Entry &e) {
                try
                {
                    s.snr_list = parse_number_list(e.value);
                }
                catch (const error &ex)
                {
                    fail(e, ex.what());
                }
            };
            h["n_list"] = [](ExperimentSpec &s, const Entry &e) {
                std::vector<double> values;
                try
                {
                    values = parse_number_list(e.value);
                }
                catch (const error &ex)
                {
                    fail(e, ex.what());
                }
                s.n_list.clear();
                for (double v : values)
                {
                    if (v < 1.0 || v != std::floor(v))
                        fail(e, "antenna counts must be positive integers");
                    s.n_list.push_back(static_cast<std::size_t>(v));
                }
            };
            h["methods"] = [](ExperimentSpec &s, const Entry &e) {
                s.methods.clear();
                try
                {
                    for (auto part : split(e.value, ','))
                        if (!part.empty())
                        {
                            const Method m = parse_method(part);
                            if (std::find(s.methods.begin(), s.methods.end(), m) == s.methods.end())
                                s.methods.push_back(m);
                        }
                }
                catch (const error &ex)
                {
                    fail(e, ex.what());
                }
            };
            h["method"] = h["methods"];
            h["mc_symbols"] = [](ExperimentSpec &s, const Entry &e) { s.mc_symbols = count(e); };
            h["theta_min_deg"] = [](ExperimentSpec &s, const Entry &e) { s.theta_deg.min = number(e); };
            h["theta_max_deg"] = [](ExperimentSpec &s, const Entry &e) { s.theta_deg.max = number(e); };
            h["theta_points"] = [](ExperimentSpec &s, const Entry &e) { s.theta_deg.points = count(e); };
            h["range_min_m"] = [](ExperimentSpec &s, const Entry &e) { s.range_m.min = number(e); };
            h["range_max_m"] = [](ExperimentSpec &s, const Entry &e) { s.range_m.max = number(e); };
            h["range_points"] = [](ExperimentSpec &s, const Entry &e) { s.range_m.points = count(e); };
            h["output_dir"] = [](ExperimentSpec &s, const Entry &e) {
                if (e.value.empty())
                    fail(e, "must not be empty");
                s.output_dir = e.value;
            };
            return h;
        }

        ExperimentSpec defaults_for(ExperimentKind kind)
        {
            ExperimentSpec s;
            s.kind = kind;
            s.snr_list = parse_number_list("0:2:30");
            s.n_list = default_n_list();
            switch (kind)
            {
            case ExperimentKind::sinr_surface:
                s.scenario.num_antennas = 32;
                break;
            case ExperimentKind::sr_vs_n:
                s.snr_list = {5.0, 15.0, 25.0};
                break;
            default:
                break;
            }
            return s;
        }
    }

    std::string_view experiment_name(ExperimentKind kind) noexcept
    {
        switch (kind)
        {
        case ExperimentKind::gamma_surface:
            return "gamma-surface";
        case ExperimentKind::sinr_surface:
            return "sinr-surface";
        case ExperimentKind::sr_vs_snr:
            return "sr-vs-snr";
        case ExperimentKind::sr_vs_n:
            return "sr-vs-n";
        case ExperimentKind::ber_vs_snr:
            return "ber-vs-snr";
        }
        return "unknown";
    }

    ExperimentKind parse_experiment(std::string_view text)
    {
        std::string key = normalize_key(text);
        std::replace(key.begin(), key.end(), '_', '-');
        for (auto kind : {ExperimentKind::gamma_surface, ExperimentKind::sinr_surface, ExperimentKind::sr_vs_snr,
                          ExperimentKind::sr_vs_n, ExperimentKind::ber_vs_snr})
            if (key == experiment_name(kind))
                return kind;
        throw invalid_argument("unknown experiment '" + std::string(text) +
                               "' (expected gamma-surface, sinr-surface, sr-vs-snr, sr-vs-n, ber-vs-snr)");
    }

    std::vector<double> LinearAxis::values() const
    {
        std::vector<double> v(points);
        for (std::size_t i = 0; i < points; ++i)
            v[i] = points == 1 ? min : min + (max - min) * static_cast<double>(i) / static_cast<double>(points - 1);
        return v;
    }

    std::vector<double> ExperimentSpec::sweep() const
    {
        switch (kind)
        {
        case ExperimentKind::sr_vs_snr:
        case ExperimentKind::ber_vs_snr:
            return snr_list;
        case ExperimentKind::sr_vs_n:
            return {n_list.begin(), n_list.end()};
        case ExperimentKind::gamma_surface:
            return gamma_grid.gamma_cm_values;
        case ExperimentKind::sinr_surface:
            return theta_deg.values();
        }
        return {};
    }

    void ExperimentSpec::validate() const
    {
        scenario.validate();
        gammas.validate();
        if (methods.empty())
            throw invalid_config("methods", "at least one method is required");
        if (!std::isfinite(snr_db))
            throw invalid_config("snr_db", "must be finite");
        for (double s : snr_list)
            if (!std::isfinite(s))
                throw invalid_config("snr_list", "values must be finite");
        switch (kind)
        {
        case ExperimentKind::gamma_surface:
            gamma_grid.validate();
            break;
        case ExperimentKind::sinr_surface:
            if (theta_deg.points == 0 || range_m.points == 0)
                throw invalid_config("grid", "probe grid must be nonempty");
            if (!(theta_deg.min > 0.0 && theta_deg.max < 180.0 && theta_deg.min <= theta_deg.max))
                throw invalid_config("theta_min_deg", "probe angles must lie inside (0, 180) degrees and be ordered");
            if (!(range_m.min > 0.0 && range_m.min <= range_m.max))
                throw invalid_config("range_min_m", "probe ranges must be positive and ordered");
            break;
        case ExperimentKind::sr_vs_snr:
            if (snr_list.empty())
                throw invalid_config("snr_list", "sweep must be nonempty");
            break;
        case ExperimentKind::ber_vs_snr:
            if (snr_list.empty())
                throw invalid_config("snr_list", "sweep must be nonempty");
            if (mc_symbols < 1000)
                throw invalid_config("mc_symbols", "BER experiments need at least 1000 symbols per point");
            break;
        case ExperimentKind::sr_vs_n:
            if (n_list.empty())
                throw invalid_config("n_list", "sweep must be nonempty");
            if (snr_list.empty())
                throw invalid_config("snr_list", "at least one SNR is required");
            for (auto n : n_list)
            {
                if (n < 2)
                    throw invalid_config("n_list", "antenna counts must be at least 2");
                if (n > scenario.num_subcarriers)
                    throw invalid_config("n_list", "antenna count exceeds num_subcarriers (N > N_S)");
            }
            break;
        }
    }

    std::vector<double> parse_number_list(std::string_view text)
    {
        text = trim(text);
        std::vector<double> out;
        if (text.empty())
            throw invalid_argument("empty list");
        for (auto part : split(text, ','))
        {
            if (part.find(':') == std::string_view::npos)
            {
                const auto v = to_double(part);
                if (!v || !std::isfinite(*v))
                    throw invalid_argument("'" + std::string(trim(part)) + "' is not a number");
                out.push_back(*v);
                continue;
            }
            const auto bounds = split(part, ':');
            if (bounds.size() != 3)
                throw invalid_argument("range must be start:step:stop");
            const auto start = to_double(bounds[0]), step = to_double(bounds[1]), stop = to_double(bounds[2]);
            if (!start || !step || !stop || !std::isfinite(*start) || !std::isfinite(*stop))
                throw invalid_argument("range bounds must be numbers");
            if (!(*step > 0.0) || *stop < *start)
                throw invalid_argument("range needs step > 0 and stop >= start");
            const auto count = static_cast<std::size_t>(std::floor((*stop - *start) / *step + 1e-9)) + 1;
            if (count > 1'000'000 || out.size() + count > 1'000'000)
                throw invalid_argument("range has too many points");
            for (std::size_t i = 0; i < count; ++i)
                out.push_back(*start + *step * static_cast<double>(i));
        }
        return out;
    }

    ExperimentSpec parse_config(std::string_view text, const std::vector<Setting> &overrides)
    {
        std::vector<Entry> entries = tokenize(text);
        for (const auto &[key, value] : overrides)
            entries.push_back({normalize_key(key), value, 0});

        ExperimentKind kind = ExperimentKind::sr_vs_snr;
        for (const auto &e : entries)
            if (e.key == "experiment")
            {
                try
                {
                    kind = parse_experiment(e.value);
                }
                catch (const error &ex)
                {
                    fail(e, ex.what());
                }
            }

        ExperimentSpec spec = defaults_for(kind);
        Resolution res;
        const auto handlers = make_handlers(res);
        for (const auto &e : entries)
        {
            const auto it = handlers.find(e.key);
            if (it == handlers.end())
                fail(e, "unknown key");
            it->second(spec, e);
        }

        if (res.power_given && res.snr_given)
            throw invalid_config("total_power_w", "give either total_power_w or snr_db, not both");
        spec.validate();
        if (res.power_given)
            spec.snr_db = snr_db(spec.scenario);
        else
            spec.scenario = with_snr_db(spec.scenario, spec.snr_db);
        return spec;
    }

    ExperimentSpec load_config(const std::filesystem::path &path, const std::vector<Setting> &overrides)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw io_error("cannot read config file '" + path.string() + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_config(buf.str(), overrides);
    }

    std::string to_config_text(const ExperimentSpec &spec)
    {
        const auto &c = spec.scenario;
        std::ostringstream out;
        auto kv = [&out](std::string_view key, const std::string &value) { out << key << " = " << value << '\n'; };
        kv("experiment", std::string(experiment_name(spec.kind)));
        std::string methods;
        for (std::size_t i = 0; i < spec.methods.size(); ++i)
            methods += (i ? ", " : "") + std::string(method_name(spec.methods[i]));
        kv("methods", methods);
        kv("num_antennas", std::to_string(c.num_antennas));
        kv("num_subcarriers", std::to_string(c.num_subcarriers));
        kv("carrier_freq_hz", format_number(c.carrier_freq_hz));
        kv("total_bandwidth_hz", format_number(c.total_bandwidth_hz));
        kv("element_spacing_m", format_number(c.spacing_m()));
        kv("power_alloc", format_number(c.power_alloc));
        // Prefer the SNR form; fall back to the wattage when it would not reproduce bit-exactly.
        if (with_snr_db(c, spec.snr_db).total_power_w == c.total_power_w)
            kv("snr_db", format_number(spec.snr_db));
        else
            kv("total_power_w", format_number(c.total_power_w));
        kv("noise_power_bob_dbm", format_number(10.0 * std::log10(c.noise_power_bob_w / 1e-3)));
        kv("noise_power_eve_dbm", format_number(10.0 * std::log10(c.noise_power_eve_w / 1e-3)));
        kv("bob_angle_deg", format_number(c.bob.angle_deg()));
        kv("bob_range_m", format_number(c.bob.range_m));
        kv("eve_angle_deg", format_number(c.eve.angle_deg()));
        kv("eve_range_m", format_number(c.eve.range_m));
        kv("rng_seed", std::to_string(c.rng_seed));
        kv("gamma_cm", format_number(spec.gammas.gamma_cm));
        kv("gamma_an", format_number(spec.gammas.gamma_an));
        if (spec.kind != ExperimentKind::sinr_surface)
        {
            kv("grid", std::to_string(spec.gamma_grid.gamma_cm_values.size()) + "x" +
                           std::to_string(spec.gamma_grid.gamma_an_values.size()));
            if (spec.gamma_grid.gamma_cm_values.size() > 1)
                kv("gamma_max", format_number(spec.gamma_grid.gamma_cm_values.back()));
        }
        kv("snr_list", join(spec.snr_list));
        kv("n_list", join(spec.n_list));
        kv("mc_symbols", std::to_string(spec.mc_symbols));
        kv("theta_min_deg", format_number(spec.theta_deg.min));
        kv("theta_max_deg", format_number(spec.theta_deg.max));
        kv("theta_points", std::to_string(spec.theta_deg.points));
        kv("range_min_m", format_number(spec.range_m.min));
        kv("range_max_m", format_number(spec.range_m.max));
        kv("range_points", std::to_string(spec.range_m.points));
        kv("output_dir", spec.output_dir.string());
        return out.str();
    }
}
