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

// AVX2/FMA kernels. Each __m256d holds two complex doubles: the same role in
// two neighbouring index groups, so any layout whose lowest target bit is at
// least 1 vectorizes with broadcast matrix entries. Layouts touching bit 0
// use the dedicated in-register path (apply_1q) or the scalar kernel.

#include <immintrin.h>

#include <algorithm>

#include "kernels_internal.hpp"

namespace remsim::kernels::detail {
namespace {

inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

struct Bcast {
  __m256d re;
  __m256d im;
};

inline Bcast bcast(cplx c) { return {_mm256_set1_pd(c.real()), _mm256_set1_pd(c.imag())}; }

// (re + i im) * v for two complex lanes.
inline __m256d cmul(const Bcast& c, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(c.re, v, _mm256_mul_pd(c.im, swapped));
}

inline __m256d cfma(const Bcast& c, __m256d v, __m256d acc) {
  return _mm256_add_pd(acc, cmul(c, v));
}

// Lane-wise complex product w * v, w not broadcast.
inline __m256d cmul_lanes(__m256d w, __m256d v) {
  const __m256d wr = _mm256_movedup_pd(w);
  const __m256d wi = _mm256_permute_pd(w, 0b1111);
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(wr, v, _mm256_mul_pd(wi, swapped));
}

void apply_1q_avx2(std::span<cplx> data, unsigned bit, const Mat2& m) {
  cplx* d = data.data();
  if (bit == 0) {
    // (a, b) share a register: new = (m00, m11) * (a, b) + (m01, m10) * (b, a).
    const __m256d diag = _mm256_setr_pd(m[0].real(), m[0].imag(), m[3].real(), m[3].imag());
    const __m256d off = _mm256_setr_pd(m[1].real(), m[1].imag(), m[2].real(), m[2].imag());
    for (std::size_t i = 0; i < data.size(); i += 2) {
      const __m256d v = load2(d + i);
      const __m256d sw = _mm256_permute2f128_pd(v, v, 0x01);
      store2(d + i, _mm256_add_pd(cmul_lanes(diag, v), cmul_lanes(off, sw)));
    }
    return;
  }
  const Bcast m00 = bcast(m[0]), m01 = bcast(m[1]), m10 = bcast(m[2]), m11 = bcast(m[3]);
  const std::size_t stride = std::size_t{1} << bit;
  const std::size_t half = data.size() / 2;
  for (std::size_t i = 0; i < half; i += 2) {
    const std::size_t i0 = insert_zero_bit(i, bit);
    const __m256d v0 = load2(d + i0);
    const __m256d v1 = load2(d + i0 + stride);
    store2(d + i0, cfma(m01, v1, cmul(m00, v0)));
    store2(d + i0 + stride, cfma(m11, v1, cmul(m10, v0)));
  }
}

void apply_2q_avx2(std::span<cplx> data, unsigned bit_hi, unsigned bit_lo, const Mat4& m) {
  const unsigned lo = std::min(bit_hi, bit_lo);
  const unsigned hi = std::max(bit_hi, bit_lo);
  if (lo == 0) {
    apply_2q_scalar(data, bit_hi, bit_lo, m);
    return;
  }
  Bcast mb[16];
  for (int k = 0; k < 16; ++k) mb[k] = bcast(m[k]);
  const std::size_t mh = std::size_t{1} << bit_hi;
  const std::size_t ml = std::size_t{1} << bit_lo;
  const std::size_t offs[4] = {0, ml, mh, mh | ml};
  cplx* d = data.data();
  const std::size_t quarter = data.size() / 4;
  for (std::size_t i = 0; i < quarter; i += 2) {
    const std::size_t base = insert_zero_bits(i, lo, hi);
    __m256d v[4];
    for (int k = 0; k < 4; ++k) v[k] = load2(d + base + offs[k]);
    for (int r = 0; r < 4; ++r) {
      __m256d acc = cmul(mb[r * 4], v[0]);
      acc = cfma(mb[r * 4 + 1], v[1], acc);
      acc = cfma(mb[r * 4 + 2], v[2], acc);
      acc = cfma(mb[r * 4 + 3], v[3], acc);
      store2(d + base + offs[r], acc);
    }
  }
}

void depolarize_1q_avx2(std::span<cplx> rho, unsigned n_qubits, unsigned q, double p) {
  if (q == 0) {
    depolarize_1q_scalar(rho, n_qubits, q, p);
    return;
  }
  const __m256d keep = _mm256_set1_pd(1.0 - 4.0 * p / 3.0);
  const __m256d mix = _mm256_set1_pd(2.0 * p / 3.0);
  const std::size_t col = std::size_t{1} << q;
  const std::size_t row = std::size_t{1} << (q + n_qubits);
  cplx* d = rho.data();
  const std::size_t quarter = rho.size() / 4;
  for (std::size_t i = 0; i < quarter; i += 2) {
    const std::size_t base = insert_zero_bits(i, q, q + n_qubits);
    const __m256d a = load2(d + base);
    const __m256d dd = load2(d + (base | row | col));
    const __m256d t = _mm256_mul_pd(mix, _mm256_add_pd(a, dd));
    store2(d + base, _mm256_fmadd_pd(keep, a, t));
    store2(d + (base | row | col), _mm256_fmadd_pd(keep, dd, t));
    store2(d + (base | col), _mm256_mul_pd(keep, load2(d + (base | col))));
    store2(d + (base | row), _mm256_mul_pd(keep, load2(d + (base | row))));
  }
}

void depolarize_2q_avx2(std::span<cplx> rho, unsigned n_qubits, unsigned qa, unsigned qb,
                        double p) {
  if (std::min(qa, qb) == 0) {
    depolarize_2q_scalar(rho, n_qubits, qa, qb, p);
    return;
  }
  const __m256d keep = _mm256_set1_pd(1.0 - 16.0 * p / 15.0);
  const __m256d mix = _mm256_set1_pd(4.0 * p / 15.0);
  unsigned bits[4] = {qa, qb, qa + n_qubits, qb + n_qubits};
  std::sort(std::begin(bits), std::end(bits));
  const std::size_t ca = std::size_t{1} << qa;
  const std::size_t cb = std::size_t{1} << qb;
  const std::size_t ra = ca << n_qubits;
  const std::size_t rb = cb << n_qubits;
  std::size_t offs[16];
  for (std::size_t k = 0; k < 16; ++k)
    offs[k] = ((k & 1) ? ca : 0) | ((k & 2) ? cb : 0) | ((k & 4) ? ra : 0) | ((k & 8) ? rb : 0);
  // Diagonal blocks: row bits equal column bits.
  constexpr int kDiag[4] = {0, 1 | 4, 2 | 8, 15};
  cplx* d = rho.data();
  const std::size_t blocks = rho.size() / 16;
  for (std::size_t i = 0; i < blocks; i += 2) {
    std::size_t base = i;
    for (unsigned b : bits) base = insert_zero_bit(base, b);
    __m256d trace = _mm256_setzero_pd();
    for (int k : kDiag) trace = _mm256_add_pd(trace, load2(d + base + offs[k]));
    const __m256d t = _mm256_mul_pd(mix, trace);
    for (int k = 0; k < 16; ++k) store2(d + base + offs[k], _mm256_mul_pd(keep, load2(d + base + offs[k])));
    for (int k : kDiag) store2(d + base + offs[k], _mm256_add_pd(load2(d + base + offs[k]), t));
  }
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table{Isa::Avx2, apply_1q_avx2, apply_2q_avx2, depolarize_1q_avx2,
                                 depolarize_2q_avx2};
  return table;
}

}  // namespace remsim::kernels::detail
