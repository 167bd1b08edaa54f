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
#include "spjc/errors.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>

namespace spjc::kernels
{
    namespace
    {
        constexpr Table scalar{Isa::scalar, detail::dot_conj_scalar, detail::superpose_scalar,
                               detail::qpsk_bit_errors_scalar};

#if defined(SPJC_HAVE_AVX2_TU)
        constexpr Table avx2{Isa::avx2, detail::dot_conj_avx2, detail::superpose_avx2, detail::qpsk_bit_errors_avx2};
#endif

        const Table *best_available() noexcept
        {
            if (const Table *t = table_for(Isa::avx2))
                return t;
            return &scalar;
        }

        const Table *initial_selection() noexcept
        {
            if (const char *env = std::getenv("SPJC_KERNELS"))
            {
                const std::string_view v(env);
                if (v == "scalar")
                    return &scalar;
                if (v == "avx2")
                    if (const Table *t = table_for(Isa::avx2))
                        return t;
            }
            return best_available();
        }

        std::atomic<const Table *> &current()
        {
            static std::atomic<const Table *> selected{initial_selection()};
            return selected;
        }
    }

    std::string_view name(Isa isa) noexcept
    {
        switch (isa)
        {
        case Isa::scalar:
            return "scalar";
        case Isa::avx2:
            return "avx2";
        }
        return "unknown";
    }

    bool cpu_supports(Isa isa) noexcept
    {
        switch (isa)
        {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        }
        return false;
    }

    const Table &scalar_table() noexcept { return scalar; }

    const Table *table_for(Isa isa) noexcept
    {
        switch (isa)
        {
        case Isa::scalar:
            return &scalar;
        case Isa::avx2:
#if defined(SPJC_HAVE_AVX2_TU)
            return cpu_supports(Isa::avx2) ? &avx2 : nullptr;
#else
            return nullptr;
#endif
        }
        return nullptr;
    }

    const Table &active() noexcept { return *current().load(std::memory_order_acquire); }

    void select(Isa isa)
    {
        const Table *t = table_for(isa);
        if (!t)
            throw invalid_argument("kernel variant '" + std::string(name(isa)) + "' is not available on this CPU");
        current().store(t, std::memory_order_release);
    }

    void select(std::string_view which)
    {
        if (which == "auto")
            current().store(best_available(), std::memory_order_release);
        else if (which == "scalar")
            select(Isa::scalar);
        else if (which == "avx2")
            select(Isa::avx2);
        else
            throw invalid_argument("unknown kernel variant '" + std::string(which) + "' (expected scalar, avx2, auto)");
    }

    cplx qpsk_symbol(std::uint8_t bits) noexcept
    {
        constexpr double a = 0.70710678118654752440;
        return {(bits & 1u) ? -a : a, (bits & 2u) ? -a : a};
    }
}
