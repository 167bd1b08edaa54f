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

#include "spjc/search.hpp"
#include "spjc/errors.hpp"
#include "spjc/metrics.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spjc
{
    namespace
    {
        void validate_axis(const std::vector<double> &axis, const char *name)
        {
            if (axis.empty())
                throw invalid_config(name, "grid axis must be nonempty");
            for (std::size_t i = 0; i < axis.size(); ++i)
            {
                if (!(axis[i] >= 0.0) || !std::isfinite(axis[i]))
                    throw invalid_config(name, "grid values must be finite and nonnegative");
                if (i > 0 && !(axis[i] > axis[i - 1]))
                    throw invalid_config(name, "grid values must be strictly ascending");
            }
        }

        std::vector<double> linspace(std::size_t count, double max)
        {
            std::vector<double> v(count, 0.0);
            for (std::size_t i = 1; i < count; ++i)
                v[i] = max * static_cast<double>(i) / static_cast<double>(count - 1);
            return v;
        }
    }

    void GammaGrid::validate() const
    {
        validate_axis(gamma_cm_values, "gamma_cm_values");
        validate_axis(gamma_an_values, "gamma_an_values");
    }

    GammaGrid GammaGrid::linear(std::size_t count_cm, std::size_t count_an, double max_gamma)
    {
        if (count_cm == 0 || count_an == 0)
            throw invalid_config("grid", "point counts must be positive");
        if (!(max_gamma > 0.0) || !std::isfinite(max_gamma))
            throw invalid_config("grid", "upper gamma bound must be positive");
        return {linspace(count_cm, max_gamma), linspace(count_an, max_gamma)};
    }

    GammaGrid default_gamma_grid() { return GammaGrid::linear(31, 31, 3.0); }

    GammaSearchResult grid_search_gamma(const ScenarioConfig &cfg, const SubcarrierPlan &plan, const GammaGrid &grid)
    {
        cfg.validate();
        grid.validate();
        const SteeringVector h_bob = steering_vector(plan, cfg, cfg.bob);
        const SteeringVector h_eve = steering_vector(plan, cfg, cfg.eve);

        GammaSearchResult result;
        result.rows = grid.gamma_cm_values.size();
        result.cols = grid.gamma_an_values.size();
        result.surface.assign(result.rows * result.cols, 0.0);

        detail::parallel_for(result.surface.size(), [&](std::size_t cell) {
            const RegularizationParams gammas{grid.gamma_cm_values[cell / result.cols],
                                              grid.gamma_an_values[cell % result.cols]};
            const BeamPair beams = synthesize(cfg, h_bob, h_eve, Method::min_rtp, gammas);
            result.surface[cell] = secrecy_rate(cfg, h_bob, h_eve, beams);
        });

        // Sequential scan with strict '>' keeps the first maximum in row-major order.
        std::size_t best = 0;
        for (std::size_t cell = 1; cell < result.surface.size(); ++cell)
            if (result.surface[cell] > result.surface[best])
                best = cell;
        result.best = {grid.gamma_cm_values[best / result.cols], grid.gamma_an_values[best % result.cols]};
        result.best_sr = result.surface[best];
        return result;
    }

    std::vector<bool> plateau_mask(const GammaSearchResult &result, double rel_tol)
    {
        if (!(rel_tol >= 0.0) || !std::isfinite(rel_tol))
            throw invalid_argument("plateau tolerance must be finite and nonnegative");
        std::vector<bool> mask(result.surface.size());
        const double floor = result.best_sr * (1.0 - rel_tol);
        for (std::size_t i = 0; i < mask.size(); ++i)
            mask[i] = result.surface[i] >= floor;
        return mask;
    }

    double relative_variation(const GammaSearchResult &result, const GammaGrid &grid, double min_cm, double min_an)
    {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < result.rows; ++i)
        {
            if (grid.gamma_cm_values[i] < min_cm)
                continue;
            for (std::size_t j = 0; j < result.cols; ++j)
            {
                if (grid.gamma_an_values[j] < min_an)
                    continue;
                lo = std::min(lo, result.at(i, j));
                hi = std::max(hi, result.at(i, j));
            }
        }
        if (!(hi > 0.0))
            return 0.0;
        return (hi - lo) / hi;
    }
}
