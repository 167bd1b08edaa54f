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

#include <vector>

namespace spjc
{
    // Axes of the (gamma_CM, gamma_AN) search; both strictly ascending and nonnegative.
    struct GammaGrid
    {
        std::vector<double> gamma_cm_values;
        std::vector<double> gamma_an_values;

        void validate() const;

        // `count` evenly spaced points over [0, max] on each axis (count >= 1; count == 1 gives {0}).
        static GammaGrid linear(std::size_t count_cm, std::size_t count_an, double max_gamma);
    };

    // Default search grid: 31 x 31 points over [0, 3]^2.
    GammaGrid default_gamma_grid();

    struct GammaSearchResult
    {
        RegularizationParams best;
        double best_sr = 0.0;
        std::size_t rows = 0; // gamma_cm axis
        std::size_t cols = 0; // gamma_an axis
        std::vector<double> surface; // row-major, surface[i * cols + j] = SR(gamma_cm[i], gamma_an[j])

        double at(std::size_t i, std::size_t j) const { return surface.at(i * cols + j); }
    };

    // Exhaustive search of the Min-RTP secrecy rate. Ties resolve to the first maximum in
    // row-major (gamma_cm-major) order.
    GammaSearchResult grid_search_gamma(const ScenarioConfig &cfg, const SubcarrierPlan &plan, const GammaGrid &grid);

    // Cells whose SR lies within `rel_tol` of the best (the plateau around the optimum).
    std::vector<bool> plateau_mask(const GammaSearchResult &result, double rel_tol);

    // (max - min) / max of the surface over cells with gamma_cm >= min_cm and gamma_an >= min_an.
    // Returns 0 for an empty region or an all-zero region.
    double relative_variation(const GammaSearchResult &result, const GammaGrid &grid, double min_cm, double min_an);
}
