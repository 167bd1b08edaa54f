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

// Data-parallel inner loops with a scalar reference and ISA-specific variants.
//
// Every variant of a kernel computes the same quantity; results agree with the scalar
// reference to rounding (FMA contraction and summation order differ). Selection happens
// once at first use from CPUID, or explicitly through select() / SPJC_KERNELS=scalar|avx2.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace spjc::kernels
{
    using cplx = std::complex<double>;

    enum class Isa
    {
        scalar,
        avx2,
    };

    std::string_view name(Isa isa) noexcept;

    struct Table
    {
        Isa isa;

        // sum_n conj(a[n]) * b[n]
        cplx (*dot_conj)(const cplx *a, const cplx *b, std::size_t n);

        // out[i] = a * x[i] + b * z[i] + noise[i]
        void (*superpose)(const cplx *x, const cplx *z, const cplx *noise, cplx a, cplx b, cplx *out, std::size_t n);

        // Coherent Gray-QPSK hard decision against `gain`, counting bit errors. `bits[i]` holds the
        // in-phase bit in bit 0 and the quadrature bit in bit 1. A decision statistic of exactly zero
        // decides bit 0.
        std::uint64_t (*qpsk_bit_errors)(const cplx *y, cplx gain, const std::uint8_t *bits, std::size_t n);
    };

    const Table &scalar_table() noexcept;

    // nullptr when the ISA is not compiled in or not supported by this CPU.
    const Table *table_for(Isa isa) noexcept;

    bool cpu_supports(Isa isa) noexcept;

    // Currently selected table. Thread-safe; selection is resolved on first call.
    const Table &active() noexcept;

    // Force a variant. Throws spjc::invalid_argument if the ISA is unavailable.
    void select(Isa isa);

    // Parses "scalar", "avx2" or "auto"; throws spjc::invalid_argument otherwise.
    void select(std::string_view name);

    // QPSK symbol for a 2-bit label: ((1 - 2 b0) + j (1 - 2 b1)) / sqrt(2).
    cplx qpsk_symbol(std::uint8_t bits) noexcept;
}
