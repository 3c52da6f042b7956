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

#include "remsim/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace remsim {
namespace {

void check_qubits(int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("qubit count out of range");
}

}  // namespace

QuantumState QuantumState::basis(int n_qubits, std::uint64_t index, Kind kind) {
  check_qubits(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) throw std::invalid_argument("basis index out of range");
  if (kind == Kind::Pure) {
    std::vector<cplx> v(dim);
    v[index] = 1.0;
    return QuantumState(n_qubits, kind, std::move(v));
  }
  std::vector<cplx> rho(dim * dim);
  rho[index * dim + index] = 1.0;
  return QuantumState(n_qubits, kind, std::move(rho));
}

QuantumState QuantumState::from_amplitudes(int n_qubits, std::vector<cplx> amplitudes) {
  check_qubits(n_qubits);
  if (amplitudes.size() != (std::size_t{1} << n_qubits))
    throw std::invalid_argument("amplitude vector length must be 2^n");
  return QuantumState(n_qubits, Kind::Pure, std::move(amplitudes));
}

QuantumState QuantumState::from_density(int n_qubits, std::vector<cplx> rho) {
  check_qubits(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (rho.size() != dim * dim) throw std::invalid_argument("density matrix must be 2^n x 2^n");
  return QuantumState(n_qubits, Kind::Mixed, std::move(rho));
}

cplx QuantumState::rho(std::size_t r, std::size_t c) const {
  if (is_pure()) return data_[r] * std::conj(data_[c]);
  return data_[r * dim() + c];
}

QuantumState QuantumState::to_density() const {
  if (!is_pure()) return *this;
  const std::size_t d = dim();
  std::vector<cplx> rho(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) rho[r * d + c] = data_[r] * std::conj(data_[c]);
  return QuantumState(n_qubits_, Kind::Mixed, std::move(rho));
}

std::vector<double> QuantumState::probabilities() const {
  const std::size_t d = dim();
  std::vector<double> p(d);
  for (std::size_t i = 0; i < d; ++i)
    p[i] = is_pure() ? std::norm(data_[i]) : data_[i * d + i].real();
  return p;
}

double QuantumState::trace() const {
  auto p = probabilities();
  double s = 0.0;
  for (double x : p) s += x;
  return s;
}

double QuantumState::hermiticity_error() const {
  if (is_pure()) return 0.0;
  const std::size_t d = dim();
  double worst = 0.0;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = r; c < d; ++c)
      worst = std::max(worst, std::abs(data_[r * d + c] - std::conj(data_[c * d + r])));
  return worst;
}

}  // namespace remsim
