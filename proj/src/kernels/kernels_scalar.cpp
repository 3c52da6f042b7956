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

// Reference kernels. The AVX2 variants are tested against these.

#include <algorithm>

#include "kernels_internal.hpp"

namespace remsim::kernels::detail {

void apply_1q_scalar(std::span<cplx> data, unsigned bit, const Mat2& m) {
  const std::size_t stride = std::size_t{1} << bit;
  const std::size_t half = data.size() / 2;
  for (std::size_t i = 0; i < half; ++i) {
    const std::size_t i0 = insert_zero_bit(i, bit);
    const std::size_t i1 = i0 | stride;
    const cplx v0 = data[i0];
    const cplx v1 = data[i1];
    data[i0] = m[0] * v0 + m[1] * v1;
    data[i1] = m[2] * v0 + m[3] * v1;
  }
}

void apply_2q_scalar(std::span<cplx> data, unsigned bit_hi, unsigned bit_lo, const Mat4& m) {
  const unsigned lo = std::min(bit_hi, bit_lo);
  const unsigned hi = std::max(bit_hi, bit_lo);
  const std::size_t mh = std::size_t{1} << bit_hi;
  const std::size_t ml = std::size_t{1} << bit_lo;
  const std::size_t quarter = data.size() / 4;
  for (std::size_t i = 0; i < quarter; ++i) {
    const std::size_t base = insert_zero_bits(i, lo, hi);
    const std::size_t idx[4] = {base, base | ml, base | mh, base | mh | ml};
    cplx v[4];
    for (int k = 0; k < 4; ++k) v[k] = data[idx[k]];
    for (int r = 0; r < 4; ++r) {
      cplx acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += m[r * 4 + k] * v[k];
      data[idx[r]] = acc;
    }
  }
}

void depolarize_1q_scalar(std::span<cplx> rho, unsigned n_qubits, unsigned q, double p) {
  // X rho X + Y rho Y + Z rho Z = 2 I (x) Tr_q rho - rho, hence
  // rho' = (1 - 4p/3) rho + (2p/3) I (x) Tr_q rho.
  const double keep = 1.0 - 4.0 * p / 3.0;
  const double mix = 2.0 * p / 3.0;
  const std::size_t col = std::size_t{1} << q;
  const std::size_t row = std::size_t{1} << (q + n_qubits);
  const std::size_t quarter = rho.size() / 4;
  for (std::size_t i = 0; i < quarter; ++i) {
    const std::size_t base = insert_zero_bits(i, q, q + n_qubits);
    const cplx a = rho[base];
    const cplx d = rho[base | row | col];
    const cplx t = mix * (a + d);
    rho[base] = keep * a + t;
    rho[base | row | col] = keep * d + t;
    rho[base | col] *= keep;
    rho[base | row] *= keep;
  }
}

void depolarize_2q_scalar(std::span<cplx> rho, unsigned n_qubits, unsigned qa, unsigned qb,
                          double p) {
  // Non-identity Pauli pairs sum to 4 I (x) Tr_ab rho - rho, hence
  // rho' = (1 - 16p/15) rho + (4p/15) I (x) Tr_ab rho.
  const double keep = 1.0 - 16.0 * p / 15.0;
  const double mix = 4.0 * p / 15.0;
  unsigned bits[4] = {qa, qb, qa + n_qubits, qb + n_qubits};
  std::sort(std::begin(bits), std::end(bits));
  const std::size_t ca = std::size_t{1} << qa;
  const std::size_t cb = std::size_t{1} << qb;
  const std::size_t ra = ca << n_qubits;
  const std::size_t rb = cb << n_qubits;
  const std::size_t blocks = rho.size() / 16;
  for (std::size_t i = 0; i < blocks; ++i) {
    std::size_t base = i;
    for (unsigned b : bits) base = insert_zero_bit(base, b);
    const std::size_t diag[4] = {base, base | ca | ra, base | cb | rb, base | ca | ra | cb | rb};
    cplx trace = 0.0;
    for (std::size_t k : diag) trace += rho[k];
    for (std::size_t off = 0; off < 16; ++off) {
      const std::size_t idx = base | ((off & 1) ? ca : 0) | ((off & 2) ? cb : 0) |
                              ((off & 4) ? ra : 0) | ((off & 8) ? rb : 0);
      rho[idx] *= keep;
    }
    for (std::size_t k : diag) rho[k] += mix * trace;
  }
}

}  // namespace remsim::kernels::detail
