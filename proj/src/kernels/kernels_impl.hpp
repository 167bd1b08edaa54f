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

#include "spjc/kernels.hpp"

namespace spjc::kernels::detail
{
    cplx dot_conj_scalar(const cplx *a, const cplx *b, std::size_t n);
    void superpose_scalar(const cplx *x, const cplx *z, const cplx *noise, cplx a, cplx b, cplx *out, std::size_t n);
    std::uint64_t qpsk_bit_errors_scalar(const cplx *y, cplx gain, const std::uint8_t *bits, std::size_t n);

#if defined(SPJC_HAVE_AVX2_TU)
    cplx dot_conj_avx2(const cplx *a, const cplx *b, std::size_t n);
    void superpose_avx2(const cplx *x, const cplx *z, const cplx *noise, cplx a, cplx b, cplx *out, std::size_t n);
    std::uint64_t qpsk_bit_errors_avx2(const cplx *y, cplx gain, const std::uint8_t *bits, std::size_t n);
#endif
}
