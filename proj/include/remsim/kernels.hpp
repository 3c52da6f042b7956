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

#include <array>
#include <complex>
#include <span>
#include <string_view>

namespace remsim::kernels {

using cplx = std::complex<double>;

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<cplx, 4>;
/// Row-major 4x4 complex matrix; local index is (bit_hi << 1) | bit_lo.
using Mat4 = std::array<cplx, 16>;

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

// All kernels act on a flat amplitude buffer whose length is a power of two.
// A density matrix over n qubits is passed as its row-major buffer: row bit q
// sits at position q + n, column bit q at position q.
struct KernelTable {
  Isa isa;

  void (*apply_1q)(std::span<cplx> data, unsigned bit, const Mat2& m);

  void (*apply_2q)(std::span<cplx> data, unsigned bit_hi, unsigned bit_lo, const Mat4& m);

  /// rho -> (1 - p) rho + p/3 (X rho X + Y rho Y + Z rho Z) on qubit q.
  void (*depolarize_1q)(std::span<cplx> rho, unsigned n_qubits, unsigned q, double p);

  /// rho -> (1 - p) rho + p/15 sum over the 15 non-identity Pauli pairs on (qa, qb).
  void (*depolarize_2q)(std::span<cplx> rho, unsigned n_qubits, unsigned qa, unsigned qb,
                        double p);
};

const KernelTable& scalar_table();

/// Null when the AVX2 translation unit was not built.
const KernelTable* avx2_table();

bool cpu_supports(Isa isa);

/// Widest ISA both compiled in and supported by this CPU.
Isa detect_best();

/// Table used by the simulator. Defaults to detect_best().
const KernelTable& active();

/// Throws std::invalid_argument if the ISA is unavailable here.
void select(Isa isa);

}  // namespace remsim::kernels
