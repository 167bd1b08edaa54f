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

#include "kernels_impl.hpp"

// Complex products are spelled out on real/imaginary parts so the reference path never
// goes through the C99 Annex G (NaN-recovering) complex multiply.

namespace spjc::kernels::detail
{
    cplx dot_conj_scalar(const cplx *a, const cplx *b, std::size_t n)
    {
        double re = 0.0, im = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            const double ar = a[i].real(), ai = a[i].imag();
            const double br = b[i].real(), bi = b[i].imag();
            re += ar * br + ai * bi;
            im += ar * bi - ai * br;
        }
        return {re, im};
    }

    void superpose_scalar(const cplx *x, const cplx *z, const cplx *noise, cplx a, cplx b, cplx *out, std::size_t n)
    {
        const double ar = a.real(), ai = a.imag(), br = b.real(), bi = b.imag();
        for (std::size_t i = 0; i < n; ++i)
        {
            const double xr = x[i].real(), xi = x[i].imag();
            const double zr = z[i].real(), zi = z[i].imag();
            out[i] = cplx(ar * xr - ai * xi + br * zr - bi * zi + noise[i].real(),
                          ar * xi + ai * xr + br * zi + bi * zr + noise[i].imag());
        }
    }

    std::uint64_t qpsk_bit_errors_scalar(const cplx *y, cplx gain, const std::uint8_t *bits, std::size_t n)
    {
        // Minimum-distance detection for Gray QPSK reduces to the signs of conj(gain) * y.
        const double gr = gain.real(), gi = gain.imag();
        std::uint64_t errors = 0;
        for (std::size_t i = 0; i < n; ++i)
        {
            const double yr = y[i].real(), yi = y[i].imag();
            const double stat_i = gr * yr + gi * yi;
            const double stat_q = gr * yi - gi * yr;
            const unsigned decided = (stat_i < 0.0 ? 1u : 0u) | (stat_q < 0.0 ? 2u : 0u);
            const unsigned diff = decided ^ bits[i];
            errors += (diff & 1u) + (diff >> 1);
        }
        return errors;
    }
}
