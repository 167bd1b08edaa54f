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

#include "spjc/channel.hpp"

#include <optional>
#include <string_view>

namespace spjc
{
    enum class Method
    {
        ea,      // equal amplitude, conjugate phase alignment, no null
        min_tp,  // minimum transmit power under orthogonality + phase alignment
        min_rtp, // Tikhonov-regularized variant of min_tp
    };

    // "EA", "MinTP", "MinRTP"
    std::string_view method_name(Method m) noexcept;

    // Case-insensitive; accepts the canonical names plus "min-tp", "min_tp", etc.
    Method parse_method(std::string_view text);

    // Orthogonal projector I - h h^H onto the complement of a unit vector h.
    class Projector
    {
    public:
        explicit Projector(cmat matrix) : matrix_(std::move(matrix)) {}

        const cmat &matrix() const noexcept { return matrix_; }
        cvec apply(const cvec &v) const { return matrix_ * v; }

    private:
        cmat matrix_;
    };

    Projector null_projector(const SteeringVector &h);

    // Same, for a raw vector; throws invalid_argument unless ||h|| = 1 within 1e-12.
    Projector null_projector(const cvec &h);

    struct RegularizationParams
    {
        double gamma_cm = 0.0;
        double gamma_an = 0.0;

        void validate() const;
        bool operator==(const RegularizationParams &) const = default;
    };

    // Regularization factors used when none are given explicitly.
    inline constexpr RegularizationParams default_gammas{2.1, 1.8};

    // Minimum-norm v with h_null^H v = 0 and h_target^H v = 1.
    // Throws infeasible_geometry when ||(I - h_null h_null^H) h_target|| <= 1e-9.
    cvec min_tp_beamformer(const SteeringVector &h_target, const SteeringVector &h_null);

    // A (A^H A + gamma I)^-1 A^H h_target, without the phase-alignment rescale.
    cvec regularized_direction(const SteeringVector &h_target, const SteeringVector &h_null, double gamma);

    // regularized_direction rescaled so that h_target^H v = 1. gamma = 0 falls back to min_tp_beamformer.
    cvec min_rtp_beamformer(const SteeringVector &h_target, const SteeringVector &h_null, double gamma);

    // Unit-magnitude-per-element (1/sqrt(N)) weights co-phased with h_target: h_target^H v = 1.
    cvec ea_beamformer(const SteeringVector &h_target);

    // Power-allocated CM and AN weights for one method.
    //   ||w_cm||^2 = beta P_s, ||w_an||^2 = (1 - beta) P_s
    struct BeamPair
    {
        cvec w_cm;
        cvec w_an;
        Method method = Method::ea;
        std::optional<RegularizationParams> gammas;
    };

    // CM targets Bob and (for MinTP/MinRTP) nulls Eve; AN targets Eve and nulls Bob.
    BeamPair synthesize(const ScenarioConfig &cfg, const SteeringVector &h_bob, const SteeringVector &h_eve,
                        Method method, const RegularizationParams &gammas = default_gammas);

    BeamPair synthesize(const ScenarioConfig &cfg, const SubcarrierPlan &plan, Method method,
                        const RegularizationParams &gammas = default_gammas);
}
