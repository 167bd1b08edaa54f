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

// Compiled with -mavx2 -mfma. Only reached through the dispatch table after a CPUID check.

#include "kernels_impl.hpp"

#include <immintrin.h>

namespace spjc::kernels::detail
{
    namespace
    {
        // [re0 im0 re1 im1] -> pointers into interleaved std::complex<double> arrays
        inline __m256d load2(const cplx *p) { return _mm256_loadu_pd(reinterpret_cast<const double *>(p)); }
        inline void store2(cplx *p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double *>(p), v); }

        // a * v for a broadcast complex constant a; v holds two interleaved complex values.
        inline __m256d cmul_const(__m256d v, __m256d a_re, __m256d a_im)
        {
            const __m256d swapped = _mm256_permute_pd(v, 0b0101); // [im re im re]
            // [ar*vr - ai*vi, ar*vi + ai*vr]
            return _mm256_fmaddsub_pd(a_re, v, _mm256_mul_pd(a_im, swapped));
        }

        inline double hsum(__m256d v)
        {
            const __m128d lo = _mm256_castpd256_pd128(v);
            const __m128d hi = _mm256_extractf128_pd(v, 1);
            const __m128d s = _mm_add_pd(lo, hi);
            return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
        }
    }

    cplx dot_conj_avx2(const cplx *a, const cplx *b, std::size_t n)
    {
        // conj(a) * b = (ar br + ai bi) + j (ar bi - ai br)
        // acc_rr lanes accumulate [ar*br, ai*bi], acc_x lanes [ar*bi, ai*br].
        __m256d acc_rr = _mm256_setzero_pd();
        __m256d acc_x = _mm256_setzero_pd();
        std::size_t i = 0;
        for (; i + 2 <= n; i += 2)
        {
            const __m256d va = load2(a + i);
            const __m256d vb = load2(b + i);
            acc_rr = _mm256_fmadd_pd(va, vb, acc_rr);
            acc_x = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), acc_x);
        }
        // acc_x = [ar0*bi0, ai0*br0, ar1*bi1, ai1*br1]; imaginary part is even lanes minus odd lanes.
        const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
        double re = hsum(acc_rr);
        double im = hsum(_mm256_mul_pd(acc_x, sign));
        for (; i < n; ++i)
        {
            const double ar = a[i].real(), ai = a[i].imag();
            const double br = b[i].real(), bi = b[i].imag();
            re += ar * br + ai * bi;
            im += ar * bi - ai * br;
        }
        return {re, im};
    }

    void superpose_avx2(const cplx *x, const cplx *z, const cplx *noise, cplx a, cplx b, cplx *out, std::size_t n)
    {
        const __m256d a_re = _mm256_set1_pd(a.real()), a_im = _mm256_set1_pd(a.imag());
        const __m256d b_re = _mm256_set1_pd(b.real()), b_im = _mm256_set1_pd(b.imag());
        std::size_t i = 0;
        for (; i + 2 <= n; i += 2)
        {
            __m256d acc = _mm256_add_pd(cmul_const(load2(x + i), a_re, a_im), cmul_const(load2(z + i), b_re, b_im));
            store2(out + i, _mm256_add_pd(acc, load2(noise + i)));
        }
        if (i < n)
            superpose_scalar(x + i, z + i, noise + i, a, b, out + i, n - i);
    }

    std::uint64_t qpsk_bit_errors_avx2(const cplx *y, cplx gain, const std::uint8_t *bits, std::size_t n)
    {
        // stat = conj(g) * y = [gr*yr + gi*yi, gr*yi - gi*yr]
        const __m256d g_re = _mm256_set1_pd(gain.real());
        const __m256d g_im_signed = _mm256_setr_pd(gain.imag(), -gain.imag(), gain.imag(), -gain.imag());
        const __m256d zero = _mm256_setzero_pd();
        std::uint64_t errors = 0;
        std::size_t i = 0;
        for (; i + 2 <= n; i += 2)
        {
            const __m256d v = load2(y + i);
            const __m256d stat = _mm256_fmadd_pd(g_re, v, _mm256_mul_pd(g_im_signed, _mm256_permute_pd(v, 0b0101)));
            // Lane k sign bit: bit0 = I of symbol i, bit1 = Q of symbol i, bit2/3 = symbol i+1.
            const unsigned decided = static_cast<unsigned>(_mm256_movemask_pd(_mm256_cmp_pd(stat, zero, _CMP_LT_OQ)));
            const unsigned sent = static_cast<unsigned>(bits[i]) | (static_cast<unsigned>(bits[i + 1]) << 2);
            errors += static_cast<std::uint64_t>(__builtin_popcount(decided ^ sent));
        }
        if (i < n)
            errors += qpsk_bit_errors_scalar(y + i, gain, bits + i, n - i);
        return errors;
    }
}
