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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "remsim/circuit.hpp"
#include "remsim/confusion.hpp"
#include "remsim/pauli.hpp"
#include "remsim/state.hpp"

namespace remsim {

/// Gate-attached depolarizing noise plus optional readout noise.
///
/// p1 and p2 are total error probabilities: after a single-qubit gate each of
/// X, Y, Z is applied with probability p1/3; after a two-qubit gate each of the
/// 15 non-identity Pauli pairs is applied with probability p2/15. Idle qubits
/// are noiseless.
struct NoiseModel {
  double p2 = 0.0;
  double p1 = 0.0;
  std::optional<ConfusionMatrix> confusion;

  /// p1 = 0.1 * p2.
  static NoiseModel depolarizing(double p2);
  static NoiseModel depolarizing(double p2, double p1);

  bool has_gate_noise() const { return p1 > 0.0 || p2 > 0.0; }
  void validate() const;
};

/// Outcome tallies indexed by basis state (bit q = qubit q).
class Counts {
 public:
  Counts() = default;
  Counts(int n_qubits, std::vector<std::uint64_t> tallies);
  static Counts from_map(int n_qubits, const std::map<std::string, std::uint64_t>& by_label);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t shots() const;
  std::uint64_t operator[](std::size_t outcome) const { return tallies_[outcome]; }
  std::uint64_t at(std::string_view label) const;
  std::span<const std::uint64_t> tallies() const { return tallies_; }

  std::vector<double> frequencies() const;
  std::map<std::string, std::uint64_t> to_map() const;

  friend bool operator==(const Counts&, const Counts&) = default;

 private:
  int n_qubits_ = 0;
  std::vector<std::uint64_t> tallies_;
};

/// n-bit label of a basis index, qubit n-1 first.
std::string outcome_label(std::size_t index, int n_qubits);

/// Deterministic stream seed derived from (base, stream) via splitmix64.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

QuantumState run_statevector(const Circuit& c, std::span<const double> theta);
QuantumState run_statevector(const Circuit& c, const std::map<std::string, double>& named);

/// Density-matrix execution with depolarizing channels after every gate.
/// Readout noise in `noise` is not applied here.
QuantumState run_density(const Circuit& c, std::span<const double> theta, const NoiseModel& noise);

/// Applies a gate to a state in place (pure or mixed).
void apply_gate(QuantumState& state, const Gate& gate, std::span<const double> theta);

void apply_depolarizing_1q(QuantumState& rho, int qubit, double p);
void apply_depolarizing_2q(QuantumState& rho, int qa, int qb, double p);

/// V with V^dagger Z V = P for P in {X, Y, Z}; I is treated as Z.
kernels::Mat2 basis_change(Pauli p);

/// Exact outcome distribution after rotating every qubit into `basis`.
std::vector<double> measurement_distribution(const QuantumState& state, const PauliString& basis);

/// Draws shots i.i.d. outcomes in `basis`. Throws on shots == 0 or a basis of
/// the wrong length.
Counts sample_counts(const QuantumState& state, const PauliString& basis, std::uint64_t shots,
                     std::uint64_t seed);

/// Draws shots outcomes from an explicit distribution.
Counts sample_distribution(std::span<const double> p, int n_qubits, std::uint64_t shots,
                           std::uint64_t seed);

/// Each recorded outcome i is resampled to j with probability C(j, i).
Counts apply_readout_noise(const Counts& counts, const ConfusionMatrix& c, std::uint64_t seed);

/// Partial energy sum_i c_i <P_i> over the non-identity members of the group,
/// from outcome frequencies (or probabilities) in group.basis. Identity
/// members are left to PauliHamiltonian::constant_part().
double expectation_from_distribution(std::span<const double> p, const MeasurementGroup& group,
                                     const PauliHamiltonian& h);
double expectation_from_counts(const Counts& counts, const MeasurementGroup& group,
                               const PauliHamiltonian& h);

}  // namespace remsim
