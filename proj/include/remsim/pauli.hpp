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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "remsim/state.hpp"

namespace remsim {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);

/// Tensor product of single-qubit Pauli operators in symplectic form.
///
/// Labels are written most-significant qubit first: in "IZ" the Z acts on
/// qubit 0 and the I on qubit 1.
class PauliString {
 public:
  static constexpr int kMaxQubits = 32;

  PauliString() = default;

  /// Throws std::invalid_argument on a character outside IXYZ or a length
  /// different from n_qubits.
  static PauliString parse(std::string_view text, int n_qubits);
  static PauliString identity(int n_qubits);
  static PauliString from_masks(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  int n_qubits() const { return n_; }
  Pauli at(int qubit) const;
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }

  int weight() const;
  int y_count() const;
  bool is_identity() const { return (x_ | z_) == 0; }
  bool is_diagonal() const { return x_ == 0; }

  std::string label() const;

  /// P|b> = phase * |b ^ x_mask>; returns the phase.
  cplx phase_on(std::uint64_t basis_index) const;

  PauliString with(int qubit, Pauli p) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

PauliString parse_pauli(std::string_view text, int n_qubits);

/// a * b = phase * c.
std::pair<cplx, PauliString> multiply(const PauliString& a, const PauliString& b);

bool commutes(const PauliString& a, const PauliString& b);

struct PauliTerm {
  PauliString pauli;
  double coeff = 0.0;
};

/// Real-weighted sum of Pauli strings plus a classical energy offset.
///
/// Duplicate labels are merged by summation at construction; first-appearance
/// order of the labels is preserved.
class PauliHamiltonian {
 public:
  PauliHamiltonian() = default;
  PauliHamiltonian(int n_qubits, std::vector<PauliTerm> terms, double offset = 0.0);

  static PauliHamiltonian from_labels(int n_qubits,
                                      std::span<const std::pair<std::string, double>> terms,
                                      double offset = 0.0);

  int n_qubits() const { return n_qubits_; }
  std::span<const PauliTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  double offset() const { return offset_; }

  /// Offset plus all identity-term coefficients: the part of the energy that
  /// needs no measurement.
  double constant_part() const;

  /// Coefficient of the given label, zero if absent.
  double coefficient(std::string_view label) const;

  PauliHamiltonian with_offset(double offset) const;

 private:
  int n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
  double offset_ = 0.0;
};

/// Terms measured together in one rotated basis.
struct MeasurementGroup {
  /// One of X, Y, Z per qubit (qubits no member touches are Z).
  PauliString basis;
  std::vector<std::size_t> members;
};

/// <P> for a pure or mixed state.
cplx pauli_expectation(const PauliString& p, const QuantumState& state);

/// sum_i c_i <P_i> + offset. Throws std::invalid_argument on a dimension
/// mismatch.
double expectation(const PauliHamiltonian& h, const QuantumState& state);

inline constexpr int kDenseQubitLimit = 12;

/// Dense 2^n x 2^n matrix with the offset on the diagonal.
Eigen::MatrixXcd to_dense_matrix(const PauliHamiltonian& h);

/// Pauli decomposition of a Hermitian matrix, c_P = Tr(P M) / 2^n. Terms with
/// |c_P| <= drop_below are omitted; the identity part stays in the terms.
PauliHamiltonian decompose_dense(const Eigen::MatrixXcd& m, double drop_below = 1e-14);

struct GroundState {
  double energy = 0.0;
  Eigen::VectorXcd vector;
};

/// Lowest eigenpair of to_dense_matrix(h) (offset included).
GroundState ground_state_energy(const PauliHamiltonian& h);

/// Greedy first-fit qubit-wise commuting grouping in term order.
std::vector<MeasurementGroup> group_terms(const PauliHamiltonian& h);

/// Every non-identity letter of p equals the basis letter at that qubit.
bool qubitwise_compatible(const PauliString& p, const PauliString& basis);

}  // namespace remsim
