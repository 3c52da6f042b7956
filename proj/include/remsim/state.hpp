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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace remsim {

using cplx = std::complex<double>;

/// Pure statevector or density matrix over n qubits.
///
/// Basis index bit q is qubit q (bit 0 is the rightmost character of a ket
/// label). Density matrices are stored row-major: rho(r, c) = data[r * dim + c].
class QuantumState {
 public:
  enum class Kind { Pure, Mixed };

  QuantumState() = default;

  static QuantumState basis(int n_qubits, std::uint64_t index, Kind kind = Kind::Pure);
  static QuantumState from_amplitudes(int n_qubits, std::vector<cplx> amplitudes);
  static QuantumState from_density(int n_qubits, std::vector<cplx> rho);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }
  Kind kind() const { return kind_; }
  bool is_pure() const { return kind_ == Kind::Pure; }

  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }

  cplx rho(std::size_t r, std::size_t c) const;

  /// |psi><psi| for pure states; a copy for mixed ones.
  QuantumState to_density() const;

  /// Computational-basis outcome probabilities (diagonal of rho).
  std::vector<double> probabilities() const;

  /// Norm squared for pure states, trace for mixed ones.
  double trace() const;

  /// max |rho - rho^dagger|; zero for pure states.
  double hermiticity_error() const;

 private:
  QuantumState(int n, Kind kind, std::vector<cplx> data)
      : n_qubits_(n), kind_(kind), data_(std::move(data)) {}

  int n_qubits_ = 0;
  Kind kind_ = Kind::Pure;
  std::vector<cplx> data_;
};

}  // namespace remsim
