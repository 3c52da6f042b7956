// Copyright 2026 The remsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>

#include "remsim/kernels.hpp"

namespace remsim::kernels::detail {

/// Spreads i over the positions not in the sorted zero-bit list.
inline std::size_t insert_zero_bit(std::size_t i, unsigned bit) {
  const std::size_t low = i & ((std::size_t{1} << bit) - 1);
  return ((i >> bit) << (bit + 1)) | low;
}

inline std::size_t insert_zero_bits(std::size_t i, unsigned lo, unsigned hi) {
  return insert_zero_bit(insert_zero_bit(i, lo), hi);
}

// Scalar entry points, also used by the AVX2 table for layouts it does not
// vectorize (target bit 0).
void apply_1q_scalar(std::span<cplx> data, unsigned bit, const Mat2& m);
void apply_2q_scalar(std::span<cplx> data, unsigned bit_hi, unsigned bit_lo, const Mat4& m);
void depolarize_1q_scalar(std::span<cplx> rho, unsigned n_qubits, unsigned q, double p);
void depolarize_2q_scalar(std::span<cplx> rho, unsigned n_qubits, unsigned qa, unsigned qb,
                          double p);

#if defined(REMSIM_WITH_AVX2)
const KernelTable& avx2_kernels();
#endif

}  // namespace remsim::kernels::detail
