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

#include "spjc/beamformers.hpp"
#include "spjc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace spjc
{
    namespace
    {
        constexpr double feasibility_tol = 1e-9;
        constexpr double pac_denominator_tol = 1e-12;

        std::string lower_alnum(std::string_view s)
        {
            std::string out;
            for (char c : s)
                if (std::isalnum(static_cast<unsigned char>(c)))
                    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            return out;
        }

        void require_same_size(const SteeringVector &a, const SteeringVector &b)
        {
            if (a.size() != b.size())
                throw invalid_argument("steering vectors differ in length");
        }

        // A h_target, after checking that the target is not (numerically) inside span(h_null).
        cvec projected_target(const Projector &a, const SteeringVector &h_target)
        {
            cvec ah = a.apply(h_target.values());
            if (ah.norm() <= feasibility_tol)
                throw infeasible_geometry("target channel lies in the span of the null channel; "
                                          "phase alignment and orthogonality cannot both hold");
            return ah;
        }

        cvec unit(const cvec &v)
        {
            const double n = v.norm();
            if (!(n > 0.0))
                throw numeric_error("cannot normalize a zero beam direction");
            return v / n;
        }
    }

    std::string_view method_name(Method m) noexcept
    {
        switch (m)
        {
        case Method::ea:
            return "EA";
        case Method::min_tp:
            return "MinTP";
        case Method::min_rtp:
            return "MinRTP";
        }
        return "unknown";
    }

    Method parse_method(std::string_view text)
    {
        const std::string key = lower_alnum(text);
        if (key == "ea")
            return Method::ea;
        if (key == "mintp")
            return Method::min_tp;
        if (key == "minrtp")
            return Method::min_rtp;
        throw invalid_argument("unknown method '" + std::string(text) + "' (expected EA, MinTP, MinRTP)");
    }

    Projector null_projector(const cvec &h)
    {
        if (h.size() == 0 || std::abs(h.norm() - 1.0) > 1e-12)
            throw invalid_argument("null_projector: generator must have unit norm");
        const auto n = h.size();
        return Projector(cmat::Identity(n, n) - h * h.adjoint());
    }

    Projector null_projector(const SteeringVector &h) { return null_projector(h.values()); }

    void RegularizationParams::validate() const
    {
        if (!(gamma_cm >= 0.0) || !std::isfinite(gamma_cm))
            throw invalid_config("gamma_cm", "must be a finite nonnegative number");
        if (!(gamma_an >= 0.0) || !std::isfinite(gamma_an))
            throw invalid_config("gamma_an", "must be a finite nonnegative number");
    }

    cvec min_tp_beamformer(const SteeringVector &h_target, const SteeringVector &h_null)
    {
        require_same_size(h_target, h_null);
        const Projector a = null_projector(h_null);
        // A (A^H A)^+ A^H = A for an orthogonal projector, so the closed form is A h / (h^H A h).
        // The second projection restores orthogonality to h_null lost to rounding.
        const cvec v = a.apply(projected_target(a, h_target));
        const cplx denom = h_target.values().dot(v);
        return v / denom;
    }

    cvec regularized_direction(const SteeringVector &h_target, const SteeringVector &h_null, double gamma)
    {
        require_same_size(h_target, h_null);
        if (!(gamma >= 0.0) || !std::isfinite(gamma))
            throw invalid_argument("regularization factor must be finite and nonnegative");
        const Projector a = null_projector(h_null);
        const cmat &am = a.matrix();
        projected_target(a, h_target);

        const auto n = am.rows();
        const cmat gram = am.adjoint() * am + gamma * cmat::Identity(n, n);
        const Eigen::LDLT<cmat> ldlt(gram);
        if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
            throw numeric_error("regularized Gram matrix is singular or indefinite");
        const cvec x = ldlt.solve(am.adjoint() * h_target.values());
        if (ldlt.info() != Eigen::Success || !x.allFinite())
            throw numeric_error("regularized solve failed");
        return am * x;
    }

    cvec min_rtp_beamformer(const SteeringVector &h_target, const SteeringVector &h_null, double gamma)
    {
        if (gamma == 0.0)
            return min_tp_beamformer(h_target, h_null);
        const cvec u = regularized_direction(h_target, h_null, gamma);
        const cplx denom = h_target.values().dot(u);
        if (std::abs(denom) <= pac_denominator_tol)
            throw numeric_error("phase-alignment denominator vanished");
        return u / denom;
    }

    cvec ea_beamformer(const SteeringVector &h_target)
    {
        const cvec &h = h_target.values();
        const double amp = 1.0 / std::sqrt(static_cast<double>(h.size()));
        cvec v(h.size());
        for (Eigen::Index i = 0; i < h.size(); ++i)
        {
            const double mag = std::abs(h[i]);
            v[i] = mag > 0.0 ? amp * h[i] / mag : cplx(amp, 0.0);
        }
        return v;
    }

    BeamPair synthesize(const ScenarioConfig &cfg, const SteeringVector &h_bob, const SteeringVector &h_eve,
                        Method method, const RegularizationParams &gammas)
    {
        require_same_size(h_bob, h_eve);
        BeamPair out;
        out.method = method;

        cvec cm, an;
        switch (method)
        {
        case Method::ea:
            cm = ea_beamformer(h_bob);
            an = ea_beamformer(h_eve);
            break;
        case Method::min_tp:
            cm = min_tp_beamformer(h_bob, h_eve);
            an = min_tp_beamformer(h_eve, h_bob);
            break;
        case Method::min_rtp:
            gammas.validate();
            cm = min_rtp_beamformer(h_bob, h_eve, gammas.gamma_cm);
            an = min_rtp_beamformer(h_eve, h_bob, gammas.gamma_an);
            out.gammas = gammas;
            break;
        }

        out.w_cm = std::sqrt(cfg.power_alloc * cfg.total_power_w) * unit(cm);
        out.w_an = std::sqrt((1.0 - cfg.power_alloc) * cfg.total_power_w) * unit(an);
        return out;
    }

    BeamPair synthesize(const ScenarioConfig &cfg, const SubcarrierPlan &plan, Method method,
                        const RegularizationParams &gammas)
    {
        cfg.validate();
        if (plan.size() != cfg.num_antennas)
            throw invalid_argument("subcarrier plan length differs from num_antennas");
        return synthesize(cfg, steering_vector(plan, cfg, cfg.bob), steering_vector(plan, cfg, cfg.eve), method,
                          gammas);
    }
}
